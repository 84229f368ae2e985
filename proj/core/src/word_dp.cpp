#include <algorithm>
#include <stdexcept>

#include "bchden/freealgebra.hpp"

namespace bchden {

// With w = w_1 ... w_n, let f_k(i) be the coefficient of the prefix w_1..w_i in
// Y^k, Y = e^{A_1} ... e^{A_K} - 1. Splitting off the last factor,
//
//     f_k(i) = sum_{j < i} f_{k-1}(j) * staircase_coeff(w_{j+1} .. w_i),
//
// and h_w = sum_k (-1)^{k+1}/k f_k(n). The recurrence is carried out on the
// integers F_k(i) = i! f_k(i):
//
//     F_k(i) = sum_j F_{k-1}(j) * i! / (j! p_1! ... p_K!)
//
// where p_m are the block lengths of the staircase segment. Every factor
// i!/(j! prod p_m!) is a product of a binomial and a multinomial, so no
// rational arithmetic happens until the final division by lcm(1..n) * n!.

WordCoefficientEvaluator::WordCoefficientEvaluator(std::size_t degree, unsigned alphabet)
    : degree_(degree), alphabet_(alphabet), factorials_(degree + 1), lcm_to_degree_(1)
{
    if (alphabet < 1)
        throw std::invalid_argument("WordCoefficientEvaluator: empty alphabet");
    factorials_[0] = 1;
    for (std::size_t i = 1; i <= degree; ++i) {
        factorials_[i] = factorials_[i - 1] * static_cast<unsigned long>(i);
        mpz_lcm_ui(lcm_to_degree_.get_mpz_t(), lcm_to_degree_.get_mpz_t(), i);
    }
    prev_.resize(degree + 1);
    curr_.resize(degree + 1);
    run_start_.resize(degree + 1);
    segment_.resize((degree + 1) * (degree + 1));
    counts_.resize(alphabet);
}

Rational WordCoefficientEvaluator::operator()(const Word& w)
{
    if (w.size() != degree_)
        throw std::invalid_argument("WordCoefficientEvaluator: word degree mismatch");
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] >= alphabet_)
            throw std::invalid_argument("WordCoefficientEvaluator: letter outside alphabet");

    const std::size_t n = degree_;
    if (n == 0)
        return 0;

    // run_start_[i]: smallest j such that w_{j+1} .. w_i is nondecreasing.
    run_start_[0] = 0;
    for (std::size_t i = 1; i <= n; ++i)
        run_start_[i] = (i >= 2 && w[i - 1] < w[i - 2]) ? i - 1 : run_start_[i - 1];

    // segment_(j, i) = i! / (j! prod_m p_m!) for staircase segments, by growing
    // the segment leftwards from position i.
    auto seg = [&](std::size_t j, std::size_t i) -> mpz_class& { return segment_[j * (n + 1) + i]; };
    mpz_class block_factorials;
    for (std::size_t i = 1; i <= n; ++i) {
        std::fill(counts_.begin(), counts_.end(), 0);
        block_factorials = 1;
        for (std::size_t j = i; j-- > run_start_[i];) {
            auto& c = counts_[w[j]];
            ++c;
            block_factorials *= static_cast<unsigned long>(c);
            auto& out = seg(j, i);
            mpz_mul(out.get_mpz_t(), factorials_[j].get_mpz_t(), block_factorials.get_mpz_t());
            mpz_divexact(out.get_mpz_t(), factorials_[i].get_mpz_t(), out.get_mpz_t());
        }
    }

    // Layer k = 0: only the empty prefix.
    for (auto& v : prev_)
        v = 0;
    prev_[0] = 1;

    mpz_class total = 0;
    mpz_class weight;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i <= n; ++i) {
            curr_[i] = 0;
            if (i < k)
                continue;
            const std::size_t lo = std::max(run_start_[i], k - 1);
            for (std::size_t j = lo; j < i; ++j)
                if (sgn(prev_[j]) != 0)
                    mpz_addmul(curr_[i].get_mpz_t(), prev_[j].get_mpz_t(), seg(j, i).get_mpz_t());
        }
        mpz_divexact_ui(weight.get_mpz_t(), lcm_to_degree_.get_mpz_t(), k);
        if (k % 2 == 1)
            mpz_addmul(total.get_mpz_t(), curr_[n].get_mpz_t(), weight.get_mpz_t());
        else
            mpz_submul(total.get_mpz_t(), curr_[n].get_mpz_t(), weight.get_mpz_t());
        std::swap(prev_, curr_);
    }

    Rational h(total, lcm_to_degree_ * factorials_[n]);
    h.canonicalize();
    return h;
}

Rational bch_coeff_word(const Word& w, unsigned alphabet)
{
    WordCoefficientEvaluator evaluate(w.size(), alphabet);
    return evaluate(w);
}

} // namespace bchden
