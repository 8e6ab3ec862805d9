#include "relpat/alphabet.hpp"

#include <cctype>

#include "relpat/errors.hpp"

namespace relpat {

bool is_reserved_letter(char c) noexcept {
    switch (c) {
    case ';':
    case ':':
    case ',':
    case '(':
    case ')':
    case 'x':
        return true;
    default:
        return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '\0';
    }
}

Alphabet::Alphabet(std::string_view letters) {
    if (letters.empty()) {
        throw PreconditionError("alphabet must not be empty");
    }
    for (char c : letters) {
        if (is_reserved_letter(c)) {
            throw PreconditionError(std::string("character '") + c + "' cannot be an alphabet letter");
        }
        auto& slot = member_[static_cast<unsigned char>(c)];
        if (slot) {
            throw PreconditionError(std::string("duplicate alphabet letter '") + c + "'");
        }
        slot = true;
        letters_.push_back(c);
    }
}

bool Alphabet::contains_all(std::string_view w) const noexcept {
    for (char c : w) {
        if (!contains(c)) {
            return false;
        }
    }
    return true;
}

} // namespace relpat
