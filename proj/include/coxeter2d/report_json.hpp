#pragma once

#include <string>

#include "json.hpp"

#include "coxeter2d/gf2.hpp"
#include "coxeter2d/matrix_group.hpp"
#include "coxeter2d/parabolic.hpp"
#include "coxeter2d/todd_coxeter.hpp"

namespace coxeter2d {

// Orders are emitted as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that.
nlohmann::json json_of_big(const BigInt& value);

nlohmann::json json_of(const GF2Matrix& m);
nlohmann::json json_of(const VerificationReport& report);
nlohmann::json json_of(const CosetRepReport& report);
nlohmann::json json_of(const HomomorphismReport& report, int n);

}  // namespace coxeter2d
