#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace spintrace {

// Half-integer quantum number stored as twice its value, so j = 3/2 holds
// twice() == 3. All arithmetic on quantum numbers stays in plain integers;
// no floating point is involved until value() is asked for.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }

    friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

private:
    int twice_ = 0;
};

// A (j, m) pair is legal iff j >= 0, |m| <= j and j, m share the same
// integer/half-integer character.
constexpr bool valid_jm(HalfInt j, HalfInt m) {
    const int tj = j.twice();
    const int tm = m.twice() < 0 ? -m.twice() : m.twice();
    return tj >= 0 && tm <= tj && (j.twice() - m.twice()) % 2 == 0;
}

inline std::string to_string(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.twice() / 2);
    return std::to_string(h.twice()) + "/2";
}

// Accepts "2", "-3", "1/2", "-3/2", and the decimal spellings "0.5", "1.0",
// "-2.5". Anything that does not denote an exact half-integer is rejected.
inline HalfInt parse_half_int(const std::string& text) {
    const auto fail = [&]() -> HalfInt {
        throw std::invalid_argument("not a half-integer: '" + text + "'");
    };
    if (text.empty()) return fail();

    std::size_t pos = 0;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    std::size_t digits_end = pos;
    while (digits_end < text.size() && std::isdigit(static_cast<unsigned char>(text[digits_end]))) ++digits_end;
    if (digits_end == pos) return fail();

    long whole = 0;
    try {
        whole = std::stol(text.substr(pos, digits_end - pos));
    } catch (const std::exception&) {
        return fail();
    }

    if (digits_end == text.size())
        return HalfInt::from_twice(static_cast<int>(sign * 2 * whole));

    const std::string rest = text.substr(digits_end);
    if (rest == "/2") return HalfInt::from_twice(static_cast<int>(sign * whole));
    if (rest == "/1") return HalfInt::from_twice(static_cast<int>(sign * 2 * whole));
    if (rest == ".0" || rest == ".00") return HalfInt::from_twice(static_cast<int>(sign * 2 * whole));
    if (rest == ".5" || rest == ".50") return HalfInt::from_twice(static_cast<int>(sign * (2 * whole + 1)));
    return fail();
}

}  // namespace spintrace
