#include "gqs/io.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gqs {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string matrix_to_json(const Matrix& m) {
    std::ostringstream os;
    os << "{\"dim\": " << m.rows() << ", \"entries\": [";
    bool first = true;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!first) os << ", ";
            first = false;
            os << '[' << format_double(m(i, j).real()) << ", " << format_double(m(i, j).imag()) << ']';
        }
    }
    os << "]}";
    return os.str();
}

Matrix matrix_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const int d = j.at("dim").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != d * d) {
        throw ParseError("matrix JSON has wrong entry count", 0);
    }
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const auto& e = entries[i * d + k];
            m(i, k) = Complex{e[0].get<double>(), e[1].get<double>()};
        }
    }
    return m;
}

std::string state_to_json(const Vector& v) {
    std::ostringstream os;
    os << "{\"dim\": " << v.size() << ", \"amplitudes\": [";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << '[' << format_double(v(i).real()) << ", " << format_double(v(i).imag()) << ']';
    }
    os << "]}";
    return os.str();
}

Vector state_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const int d = j.at("dim").get<int>();
    const auto& amplitudes = j.at("amplitudes");
    if (static_cast<int>(amplitudes.size()) != d) {
        throw ParseError("state JSON has wrong amplitude count", 0);
    }
    Vector v(d);
    for (int i = 0; i < d; ++i) {
        v(i) = Complex{amplitudes[i][0].get<double>(), amplitudes[i][1].get<double>()};
    }
    return v;
}

std::string element_to_text(const FieldElement& a) {
    std::ostringstream os;
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        if (k) os << ',';
        os << a.coeffs[k];
    }
    return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text, std::size_t base_position) {
    std::vector<int> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string token = text.substr(start, end - start);
        if (token.empty()) throw ParseError("empty coefficient", base_position + start);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("invalid coefficient '" + token + "'", base_position + start);
        }
        if (used != token.size()) {
            throw ParseError("trailing characters in coefficient '" + token + "'", base_position + start + used);
        }
        values.push_back(value);
        if (end == text.size()) break;
        start = end + 1;
    }
    return values;
}

}  // namespace

FieldElement element_from_text(const FieldContext& ctx, const std::string& text) {
    return ctx.from_coeffs(parse_int_list(text, 0));
}

std::string poly_to_text(const ZpPoly& f) {
    std::ostringstream os;
    const int degree = f.degree();
    for (int k = 0; k < degree; ++k) {
        if (k) os << ',';
        os << f.coeff(k);
    }
    if (degree <= 0) os << '0';  // constants keep a single coefficient
    return os.str();
}

SystemSpec parse_system_spec(const std::string& text) {
    // split on commas, then regroup: a token containing '=' opens a new key
    struct Pair {
        std::string key;
        std::string value;
        std::size_t position;
    };
    std::vector<Pair> pairs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string token = text.substr(start, end - start);
        const std::size_t eq = token.find('=');
        if (eq != std::string::npos) {
            pairs.push_back({token.substr(0, eq), token.substr(eq + 1), start});
        } else if (!pairs.empty()) {
            pairs.back().value += "," + token;
        } else if (!token.empty()) {
            throw ParseError("expected key=value, got '" + token + "'", start);
        }
        if (end == text.size()) break;
        start = end + 1;
    }

    SystemSpec spec;
    bool have_p = false, have_l = false, have_poly = false, have_h = false;
    for (const auto& pair : pairs) {
        if (pair.key == "p") {
            spec.p = parse_int_list(pair.value, pair.position).at(0);
            have_p = true;
        } else if (pair.key == "l" || pair.key == "ell") {
            spec.ell = parse_int_list(pair.value, pair.position).at(0);
            have_l = true;
        } else if (pair.key == "poly") {
            spec.poly = parse_int_list(pair.value, pair.position);
            have_poly = true;
        } else if (pair.key == "h") {
            spec.h = parse_int_list(pair.value, pair.position);
            have_h = true;
        } else {
            throw ParseError("unknown key '" + pair.key + "'", pair.position);
        }
    }
    if (!have_p) throw ParseError("missing key 'p'", text.size());
    if (!have_l) throw ParseError("missing key 'l'", text.size());
    if (!have_poly) throw ParseError("missing key 'poly'", text.size());
    if (!have_h) throw ParseError("missing key 'h'", text.size());
    return spec;
}

FieldContext context_from_spec(const SystemSpec& spec) {
    if (spec.ell < 1) throw Error("ell must be positive");
    if (static_cast<int>(spec.poly.size()) != spec.ell) {
        throw ReduciblePolynomial("poly needs exactly ell coefficients");
    }
    std::vector<int> h = spec.h;
    if (static_cast<int>(h.size()) > spec.ell) throw ContextMismatch("h has too many coefficients");
    h.resize(spec.ell, 0);
    IrreduciblePoly poly{spec.poly};
    return FieldContext::build(spec.p, spec.ell, poly, FieldElement{h});
}

FieldContext context_from_spec(const std::string& text) {
    return context_from_spec(parse_system_spec(text));
}

}  // namespace gqs
