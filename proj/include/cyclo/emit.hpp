#pragma once

#include <string>

#include "cyclo/explicit.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/sparsegen.hpp"

namespace cyclo {

enum class Format { Text, Json };

/// "3" for prime fields, "3^2" otherwise.
std::string q_label(const FieldContext& ctx);

/// "(c0, c1, ...)" in canonical encodings.
std::string coeff_tuple(const Poly& f);

/// Header line `q=.. n=.. r=.. count=.. degree=..` then one factor per line,
/// or a single-line JSON object. Output ends with a newline.
std::string emit(const ExplicitFactorization& ef, Format format);
std::string emit(const FactorizationReport& report, Format format);
std::string emit(const SparseFamily& family, Format format);

}  // namespace cyclo
