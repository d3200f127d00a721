// Convenience umbrella: the whole library in one include.
#pragma once

#include "iqc/enumerate.hpp"
#include "iqc/errors.hpp"
#include "iqc/grover.hpp"
#include "iqc/interference.hpp"
#include "iqc/noise.hpp"
#include "iqc/oracle.hpp"
#include "iqc/random.hpp"
#include "iqc/serialize.hpp"
#include "iqc/statevector.hpp"
