#pragma once

// Truncated formal power series in K non-commuting generators with exact
// rational coefficients, and two independent ways of obtaining coefficients
// of H = log(e^{A_1} ... e^{A_K}):
//
//  * bch_series     dense series arithmetic (exp, multiply, log(1 + Y))
//  * bch_coeff_word dynamic program over one word, no tables materialized

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bchden {

using Rational = mpq_class;

/// Generator index; letter 0 prints as 'A'.
using Letter = std::uint32_t;

/// A word over the alphabet {0, ..., K-1}. Packs to a base-K integer with the
/// first letter most significant, so packed order is lexicographic order.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static Word unpack(std::uint64_t index, std::size_t length, unsigned alphabet);
    /// A_i^length.
    static Word power(Letter letter, std::size_t length);

    /// Uppercase letters for K <= 26 ("AAB"), comma separated indices otherwise
    /// ("0,0,1"). Throws std::invalid_argument on malformed input or a
    /// letter outside the alphabet.
    static Word parse(std::string_view text, unsigned alphabet);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }

    std::uint64_t pack(unsigned alphabet) const;
    std::string to_string(unsigned alphabet) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// K^n, throwing BudgetExceeded if it does not fit in 64 bits.
std::uint64_t word_count(unsigned alphabet, std::size_t degree);

/// All coefficients of one homogeneous degree, indexed by packed word.
class DegreeTable {
public:
    DegreeTable(std::size_t degree, unsigned alphabet);

    std::size_t degree() const noexcept { return degree_; }
    unsigned alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    Rational& operator[](std::uint64_t index) { return coeffs_[index]; }
    const Rational& operator[](std::uint64_t index) const { return coeffs_[index]; }
    const Rational& at(const Word& w) const;

    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const DegreeTable&, const DegreeTable&) = default;

private:
    std::size_t degree_;
    unsigned alphabet_;
    std::vector<Rational> coeffs_;
};

/// Memory guard for dense series: the total number of stored coefficients
/// sum_{n <= N} K^n must not exceed max_entries.
struct SeriesBudget {
    std::uint64_t max_entries = std::uint64_t{1} << 22;
};

/// Series truncated after degree max_degree; one DegreeTable per degree.
class TruncatedSeries {
public:
    /// The zero series.
    TruncatedSeries(unsigned alphabet, std::size_t max_degree, SeriesBudget budget = {});

    static TruncatedSeries constant(unsigned alphabet, std::size_t max_degree,
                                    const Rational& value, SeriesBudget budget = {});

    unsigned alphabet() const noexcept { return alphabet_; }
    std::size_t max_degree() const noexcept { return tables_.size() - 1; }

    DegreeTable& table(std::size_t degree) { return tables_.at(degree); }
    const DegreeTable& table(std::size_t degree) const { return tables_.at(degree); }

    /// 0 for words longer than max_degree.
    Rational coefficient(const Word& w) const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const Rational& scalar);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    unsigned alphabet_;
    std::vector<DegreeTable> tables_;
};

/// Coefficient of w in e^{A_1} ... e^{A_K}: 1/(p_1! ... p_K!) if
/// w = A_1^{p_1} ... A_K^{p_K}, otherwise 0. The empty word gives 1.
Rational staircase_coeff(const Word& w, unsigned alphabet);

/// e^{A_i} truncated at degree N.
TruncatedSeries series_exp_generator(Letter generator, std::size_t max_degree, unsigned alphabet,
                                     SeriesBudget budget = {});

/// Cauchy product over splits w = u v, truncated at the common max degree.
/// Throws std::invalid_argument on alphabet or degree mismatch.
TruncatedSeries series_multiply(const TruncatedSeries& x, const TruncatedSeries& y);

/// sum_{k=1}^{N} (-1)^{k+1}/k Y^k; exact because Y^k has no terms below
/// degree k. Throws std::invalid_argument if Y has a constant term.
TruncatedSeries series_log1p(const TruncatedSeries& y);

/// log(e^{A_1} ... e^{A_K}) truncated at degree N (K >= 2, N >= 1).
TruncatedSeries bch_series(unsigned alphabet, std::size_t max_degree, SeriesBudget budget = {});

/// h_w for a single word by a prefix dynamic program; agrees with bch_series.
Rational bch_coeff_word(const Word& w, unsigned alphabet);

/// Reusable state for bch_coeff_word over many words of the same degree
/// (factorials and lcm(1..n) are precomputed). Not thread safe; use one
/// evaluator per worker.
class WordCoefficientEvaluator {
public:
    WordCoefficientEvaluator(std::size_t degree, unsigned alphabet);

    Rational operator()(const Word& w);

private:
    std::size_t degree_;
    unsigned alphabet_;
    std::vector<mpz_class> factorials_;
    mpz_class lcm_to_degree_;
    // Scratch buffers reused across calls.
    std::vector<mpz_class> prev_, curr_;
    std::vector<std::size_t> run_start_;
    std::vector<mpz_class> segment_;
    std::vector<std::size_t> counts_;
};

} // namespace bchden
