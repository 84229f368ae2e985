#include <stdexcept>
#include <string>

#include "bchden/errors.hpp"
#include "bchden/freealgebra.hpp"

namespace bchden {

DegreeTable::DegreeTable(std::size_t degree, unsigned alphabet)
    : degree_(degree), alphabet_(alphabet), coeffs_(word_count(alphabet, degree))
{
}

const Rational& DegreeTable::at(const Word& w) const
{
    if (w.size() != degree_)
        throw std::invalid_argument("DegreeTable::at: word degree mismatch");
    return coeffs_[w.pack(alphabet_)];
}

TruncatedSeries::TruncatedSeries(unsigned alphabet, std::size_t max_degree, SeriesBudget budget)
    : alphabet_(alphabet)
{
    if (alphabet < 1)
        throw std::invalid_argument("TruncatedSeries: empty alphabet");
    std::uint64_t total = 0;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        total += word_count(alphabet, n);
        if (total > budget.max_entries)
            throw BudgetExceeded("TruncatedSeries: K = " + std::to_string(alphabet) +
                                 ", N = " + std::to_string(max_degree) +
                                 " exceeds the series budget of " +
                                 std::to_string(budget.max_entries) + " coefficients");
    }
    tables_.reserve(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n)
        tables_.emplace_back(n, alphabet);
}

TruncatedSeries TruncatedSeries::constant(unsigned alphabet, std::size_t max_degree,
                                          const Rational& value, SeriesBudget budget)
{
    TruncatedSeries s(alphabet, max_degree, budget);
    s.tables_[0][0] = value;
    return s;
}

Rational TruncatedSeries::coefficient(const Word& w) const
{
    if (w.size() > max_degree())
        return 0;
    return tables_[w.size()].at(w);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
    if (other.alphabet_ != alphabet_ || other.max_degree() != max_degree())
        throw std::invalid_argument("TruncatedSeries::operator+=: shape mismatch");
    for (std::size_t n = 0; n < tables_.size(); ++n)
        for (std::uint64_t i = 0; i < tables_[n].size(); ++i)
            tables_[n][i] += other.tables_[n][i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar)
{
    for (auto& t : tables_)
        for (std::uint64_t i = 0; i < t.size(); ++i)
            t[i] *= scalar;
    return *this;
}

Rational staircase_coeff(const Word& w, unsigned alphabet)
{
    mpz_class denominator = 1;
    std::size_t block = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= alphabet)
            throw std::invalid_argument("staircase_coeff: letter outside alphabet");
        if (i > 0 && w[i] < w[i - 1])
            return 0;
        block = (i > 0 && w[i] == w[i - 1]) ? block + 1 : 1;
        denominator *= block;
    }
    return Rational(mpz_class(1), denominator);
}

TruncatedSeries series_exp_generator(Letter generator, std::size_t max_degree, unsigned alphabet,
                                     SeriesBudget budget)
{
    if (generator >= alphabet)
        throw std::invalid_argument("series_exp_generator: generator outside alphabet");
    TruncatedSeries s(alphabet, max_degree, budget);
    mpz_class factorial = 1;
    for (std::size_t j = 0; j <= max_degree; ++j) {
        if (j > 0)
            factorial *= static_cast<unsigned long>(j);
        s.table(j)[Word::power(generator, j).pack(alphabet)] = Rational(mpz_class(1), factorial);
    }
    return s;
}

namespace {

std::vector<std::uint64_t> nonzero_indices(const DegreeTable& t)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < t.size(); ++i)
        if (sgn(t[i]) != 0)
            out.push_back(i);
    return out;
}

} // namespace

TruncatedSeries series_multiply(const TruncatedSeries& x, const TruncatedSeries& y)
{
    if (x.alphabet() != y.alphabet())
        throw std::invalid_argument("series_multiply: alphabet mismatch");
    if (x.max_degree() != y.max_degree())
        throw std::invalid_argument("series_multiply: max degree mismatch");

    const unsigned alphabet = x.alphabet();
    const std::size_t max_degree = x.max_degree();
    TruncatedSeries result(alphabet, max_degree, {~std::uint64_t{0}});

    std::vector<std::vector<std::uint64_t>> x_nz(max_degree + 1), y_nz(max_degree + 1);
    std::vector<std::uint64_t> shift(max_degree + 1);
    for (std::size_t d = 0; d <= max_degree; ++d) {
        x_nz[d] = nonzero_indices(x.table(d));
        y_nz[d] = nonzero_indices(y.table(d));
        shift[d] = word_count(alphabet, d);
    }

    Rational product;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        auto& out = result.table(n);
        for (std::size_t j = 0; j <= n; ++j) {
            const auto& xt = x.table(j);
            const auto& yt = y.table(n - j);
            for (auto u : x_nz[j]) {
                for (auto v : y_nz[n - j]) {
                    mpq_mul(product.get_mpq_t(), xt[u].get_mpq_t(), yt[v].get_mpq_t());
                    auto& target = out[u * shift[n - j] + v];
                    mpq_add(target.get_mpq_t(), target.get_mpq_t(), product.get_mpq_t());
                }
            }
        }
    }
    return result;
}

TruncatedSeries series_log1p(const TruncatedSeries& y)
{
    if (sgn(y.table(0)[0]) != 0)
        throw std::invalid_argument("series_log1p: argument has a nonzero constant term");

    const std::size_t max_degree = y.max_degree();
    TruncatedSeries result(y.alphabet(), max_degree, {~std::uint64_t{0}});
    TruncatedSeries power = y;
    for (std::size_t k = 1; k <= max_degree; ++k) {
        if (k > 1)
            power = series_multiply(power, y);
        const Rational c(mpz_class(k % 2 == 1 ? 1 : -1), mpz_class(static_cast<unsigned long>(k)));
        // Y^k starts at degree k.
        for (std::size_t n = k; n <= max_degree; ++n) {
            auto& out = result.table(n);
            const auto& in = power.table(n);
            for (std::uint64_t i = 0; i < in.size(); ++i)
                if (sgn(in[i]) != 0)
                    out[i] += c * in[i];
        }
    }
    return result;
}

TruncatedSeries bch_series(unsigned alphabet, std::size_t max_degree, SeriesBudget budget)
{
    if (alphabet < 2)
        throw std::invalid_argument("bch_series: alphabet size must be >= 2");
    if (max_degree < 1)
        throw std::invalid_argument("bch_series: max degree must be >= 1");

    TruncatedSeries product = series_exp_generator(0, max_degree, alphabet, budget);
    for (Letter i = 1; i < alphabet; ++i)
        product = series_multiply(product, series_exp_generator(i, max_degree, alphabet, budget));
    product.table(0)[0] = 0;
    return series_log1p(product);
}

} // namespace bchden
