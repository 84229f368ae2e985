#include <limits>
#include <stdexcept>
#include <string>

#include "bchden/errors.hpp"
#include "bchden/freealgebra.hpp"

namespace bchden {

std::uint64_t word_count(unsigned alphabet, std::size_t degree)
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < degree; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / alphabet)
            throw BudgetExceeded("word_count: K^n does not fit in 64 bits");
        count *= alphabet;
    }
    return count;
}

Word Word::unpack(std::uint64_t index, std::size_t length, unsigned alphabet)
{
    std::vector<Letter> letters(length);
    for (std::size_t i = length; i-- > 0;) {
        letters[i] = static_cast<Letter>(index % alphabet);
        index /= alphabet;
    }
    if (index != 0)
        throw std::out_of_range("Word::unpack: index exceeds K^length");
    return Word(std::move(letters));
}

Word Word::power(Letter letter, std::size_t length)
{
    return Word(std::vector<Letter>(length, letter));
}

Word Word::parse(std::string_view text, unsigned alphabet)
{
    if (alphabet < 1)
        throw std::invalid_argument("Word::parse: empty alphabet");
    std::vector<Letter> letters;
    if (alphabet <= 26) {
        for (char c : text) {
            if (c < 'A' || c >= static_cast<char>('A' + alphabet))
                throw std::invalid_argument("Word::parse: letter '" + std::string(1, c) +
                                            "' outside alphabet of size " +
                                            std::to_string(alphabet));
            letters.push_back(static_cast<Letter>(c - 'A'));
        }
        return Word(std::move(letters));
    }

    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        auto comma = text.find(',', pos);
        auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - pos);
        if (item.empty())
            throw std::invalid_argument("Word::parse: empty index");
        Letter value = 0;
        for (char c : item) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("Word::parse: bad index '" + std::string(item) + "'");
            value = value * 10 + static_cast<Letter>(c - '0');
            if (value >= alphabet)
                throw std::invalid_argument("Word::parse: index outside alphabet");
        }
        letters.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Word(std::move(letters));
}

std::uint64_t Word::pack(unsigned alphabet) const
{
    std::uint64_t index = 0;
    for (auto letter : letters_) {
        if (letter >= alphabet)
            throw std::invalid_argument("Word::pack: letter outside alphabet");
        index = index * alphabet + letter;
    }
    return index;
}

std::string Word::to_string(unsigned alphabet) const
{
    std::string out;
    if (alphabet <= 26) {
        for (auto letter : letters_)
            out.push_back(static_cast<char>('A' + letter));
        return out;
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0)
            out.push_back(',');
        out += std::to_string(letters_[i]);
    }
    return out;
}

} // namespace bchden
