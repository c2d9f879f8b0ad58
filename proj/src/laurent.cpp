#include "tsurf/laurent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tsurf {

LaurentPoly LaurentPoly::constant(int nvars, const Rat& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, int var, int doubled_exp, const Rat& c) {
    LaurentPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[var] = doubled_exp;
    if (c != 0) p.terms_[e] = c;
    return p;
}

void LaurentPoly::add_term(const std::vector<int>& exp, const Rat& c) {
    if ((int)exp.size() != nvars_) throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (c != 0) terms_[exp] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: arity mismatch");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: arity mismatch");
    LaurentPoly r(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

double LaurentPoly::eval(const std::vector<double>& z) const {
    if ((int)z.size() != nvars_) throw std::invalid_argument("LaurentPoly: point arity mismatch");
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double ex = 0;
        for (int i = 0; i < nvars_; ++i) ex += e[i] * z[i];
        s += rat_to_double(c) * std::exp(ex / 4.0);
    }
    return s;
}

LaurentPoly LaurentPoly::d_dz(int var) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) r.add_term(e, c * Rat(e[var], 4));
    return r;
}

bool LaurentPoly::integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (rat_den(c) != 1) return false;
    return true;
}

bool LaurentPoly::positive_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c <= 0) return false;
    return true;
}

LaurentPoly LaurentPoly::sign_normalized() const {
    bool all_neg = !terms_.empty();
    for (const auto& [e, c] : terms_)
        if (c > 0) all_neg = false;
    return all_neg ? -*this : *this;
}

std::string LaurentPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        std::ostringstream mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << var_names.at(i);
            if (e[i] != 2) {
                mono << "^";
                if (e[i] % 2 == 0)
                    mono << e[i] / 2;
                else
                    mono << "(" << e[i] << "/2)";
            }
        }
        if (!any) {
            os << rat_str(c);
        } else if (c == 1) {
            os << mono.str();
        } else {
            os << rat_str(c) << "*" << mono.str();
        }
    }
    return os.str();
}

}  // namespace tsurf
