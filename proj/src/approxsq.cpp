#include "seqlab/approxsq.hpp"

#include <stdexcept>

#include "seqlab/numutil.hpp"

namespace seqlab::approxsq {

BigRational parse_rational(const std::string& text) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

mpz_class ceil_rational(const BigRational& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

BigRational approx_square_step(const BigRational& x) {
    if (x <= 1) throw std::domain_error("approximate squaring requires x > 1");
    BigRational r = x * ceil_rational(x);
    r.canonicalize();
    return r;
}

Trajectory trajectory(const BigRational& x0, std::size_t max_steps, std::size_t digit_budget) {
    if (x0 < 1) throw std::domain_error("trajectory requires x0 >= 1");
    Trajectory t;
    t.start = x0;
    t.start.canonicalize();

    BigRational x = t.start;
    while (x.get_den() != 1 && t.steps.size() < max_steps) {
        x = approx_square_step(x);
        if (decimal_digits(x.get_num()) > digit_budget) {
            t.budget_exceeded = true;
            return t;  // recorded outcome, not an error
        }
        t.steps.push_back(x);
    }
    if (x.get_den() == 1) {
        t.terminated = true;
        t.final_integer_digits = decimal_digits(x.get_num());
    }
    return t;
}

std::size_t den2_predicted_steps(std::uint64_t l) {
    if (l == 0) throw std::invalid_argument("l must be >= 1");
    std::size_t m = 0;
    while ((l & 1) == 0) {
        l >>= 1;
        ++m;
    }
    return m + 1;
}

}  // namespace seqlab::approxsq
