#pragma once

#include <array>
#include <string>
#include <string_view>

namespace relpat {

using Word = std::string;

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view letters);

    const std::string& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool contains(char c) const noexcept { return member_[static_cast<unsigned char>(c)]; }
    bool contains_all(std::string_view w) const noexcept;

    // Same set of letters, ignoring declaration order.
    bool same_letters(const Alphabet& other) const noexcept { return member_ == other.member_; }

    bool operator==(const Alphabet& other) const noexcept { return letters_ == other.letters_; }

private:
    std::string letters_;
    std::array<bool, 256> member_{};
};

// Characters reserved by the text grammar; they can never be letters.
bool is_reserved_letter(char c) noexcept;

} // namespace relpat
