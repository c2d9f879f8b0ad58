#pragma once

#include "tsurf/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace tsurf {

// Multivariate Laurent polynomial in t_alpha = e^{z_alpha/2}, one variable
// per undirected edge. Exponents may be half-integral and are stored doubled:
// a monomial key d stands for prod_alpha t_alpha^{d_alpha/2}.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const Rat& c);
    // t_var^{num/2}
    static LaurentPoly monomial(int nvars, int var, int doubled_exp, const Rat& c = 1);

    int nvars() const { return nvars_; }
    bool zero() const { return terms_.empty(); }
    int term_count() const { return (int)terms_.size(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exp, const Rat& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // evaluate at z (edge coordinates): sum c * exp(sum_alpha d_alpha z_alpha / 4)
    double eval(const std::vector<double>& z) const;
    // d/dz_var: each monomial picks up factor d_var/4
    LaurentPoly d_dz(int var) const;

    bool integer_coefficients() const;
    bool positive_coefficients() const;
    // flip the sign of every coefficient if they are uniformly negative
    LaurentPoly sign_normalized() const;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, Rat> terms_;
};

}  // namespace tsurf
