#include "zsw/length_set.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "zsw/errors.hpp"

namespace zsw {

LengthSet::LengthSet(std::vector<Interval> intervals) {
    if (intervals.empty())
        throw std::invalid_argument("LengthSet must be nonempty");
    for (const auto& iv : intervals)
        if (iv.lo < 1 || iv.hi < iv.lo)
            throw std::invalid_argument("LengthSet interval [" + std::to_string(iv.lo) + "," +
                                        std::to_string(iv.hi) + "] is invalid");
    std::sort(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    for (const auto& iv : intervals) {
        if (!intervals_.empty()) {
            auto& last = intervals_.back();
            if (last.hi == kUnbounded || iv.lo <= last.hi + 1) {
                last.hi = std::max(last.hi, iv.hi);
                continue;
            }
        }
        intervals_.push_back(iv);
    }
}

LengthSet LengthSet::all() { return LengthSet({{1, kUnbounded}}); }
LengthSet LengthSet::up_to(std::int64_t k) { return LengthSet({{1, k}}); }
LengthSet LengthSet::exactly(std::int64_t k) { return LengthSet({{k, k}}); }
LengthSet LengthSet::at_least(std::int64_t k) { return LengthSet({{k, kUnbounded}}); }
LengthSet LengthSet::interval(std::int64_t lo, std::int64_t hi) { return LengthSet({{lo, hi}}); }

LengthSet LengthSet::unite(const LengthSet& other) const {
    std::vector<Interval> merged = intervals_;
    merged.insert(merged.end(), other.intervals_.begin(), other.intervals_.end());
    return LengthSet(std::move(merged));
}

bool LengthSet::contains(std::int64_t length) const noexcept {
    for (const auto& iv : intervals_)
        if (length >= iv.lo && length <= iv.hi)
            return true;
    return false;
}

std::int64_t LengthSet::slot_limit() const noexcept {
    const auto& last = intervals_.back();
    return last.hi == kUnbounded ? last.lo : last.hi;
}

bool LengthSet::all_multiples_of(std::int64_t d) const noexcept {
    if (!is_bounded() || d <= 0)
        return false;
    for (const auto& iv : intervals_)
        for (std::int64_t x = iv.lo; x <= iv.hi; ++x)
            if (x % d != 0)
                return false;
    return true;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    bool consume(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view token) {
        if (!consume(token))
            throw ParseError("expected '" + std::string(token) + "' in length set", pos_);
    }
    std::int64_t number() {
        skip_space();
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (LengthSet::kUnbounded - 9) / 10)
                throw ParseError("length too large", start);
            v = v * 10 + (text_[pos_++] - '0');
        }
        if (pos_ == start)
            throw ParseError("expected a length", start);
        if (v < 1)
            throw ParseError("lengths must be >= 1", start);
        return v;
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

LengthSet LengthSet::parse(std::string_view text) {
    Cursor cur(text);
    std::vector<Interval> parts;
    do {
        const std::size_t start = cur.pos();
        if (cur.consume("all") || cur.consume("ALL") || cur.consume("N")) {
            parts.push_back({1, kUnbounded});
        } else if (cur.consume("<=")) {
            parts.push_back({1, cur.number()});
        } else if (cur.consume(">=")) {
            parts.push_back({cur.number(), kUnbounded});
        } else if (cur.consume("=")) {
            const auto k = cur.number();
            parts.push_back({k, k});
        } else if (cur.consume("[")) {
            const auto lo = cur.number();
            cur.expect(",");
            std::int64_t hi;
            if (cur.consume("inf"))
                hi = kUnbounded;
            else
                hi = cur.number();
            if (!cur.consume("]") && !(hi == kUnbounded && cur.consume(")")))
                throw ParseError("expected ']' in length set", cur.pos());
            if (hi < lo)
                throw ParseError("empty interval in length set", start);
            parts.push_back({lo, hi});
        } else {
            throw ParseError("unrecognised length set term", start);
        }
    } while (cur.consume(","));
    if (!cur.done())
        throw ParseError("trailing characters in length set", cur.pos());
    return LengthSet(std::move(parts));
}

std::string LengthSet::to_string() const {
    if (intervals_.size() == 1 && intervals_[0].lo == 1 && intervals_[0].hi == kUnbounded)
        return "all";
    std::string out;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& iv = intervals_[i];
        if (i)
            out += ',';
        if (iv.hi == kUnbounded)
            out += ">=" + std::to_string(iv.lo);
        else if (iv.lo == iv.hi)
            out += "=" + std::to_string(iv.lo);
        else
            out += "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
    }
    return out;
}

} // namespace zsw
