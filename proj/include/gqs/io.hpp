#pragma once

#include <string>
#include <vector>

#include "gqs/field.hpp"
#include "gqs/zd_system.hpp"

namespace gqs {

// %.17g with no locale dependence; shared by every emitter so repeated runs
// are byte-identical.
std::string format_double(double value);

// {"dim": d, "entries": [[re, im], ...]} row-major.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

// {"dim": d, "amplitudes": [[re, im], ...]}.
std::string state_to_json(const Vector& v);
Vector state_from_json(const std::string& text);

// Comma-separated coefficients low-to-high: "2,1" is c_0 = 2, c_1 = 1.
std::string element_to_text(const FieldElement& a);
FieldElement element_from_text(const FieldContext& ctx, const std::string& text);
std::string poly_to_text(const ZpPoly& f);  // monic leading coefficient dropped

// "p=3,l=2,poly=2,1,h=1,0" -> FieldContext. Values may contain commas, so
// tokens are regrouped at the known keys.
struct SystemSpec {
    int p = 0;
    int ell = 0;
    std::vector<int> poly;
    std::vector<int> h;
};

SystemSpec parse_system_spec(const std::string& text);
FieldContext context_from_spec(const SystemSpec& spec);
FieldContext context_from_spec(const std::string& text);

}  // namespace gqs
