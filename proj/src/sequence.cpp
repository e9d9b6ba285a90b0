#include "zsw/sequence.hpp"

#include <stdexcept>

namespace zsw {

GSequence::GSequence(FiniteAbelianGroup group)
    : group_(std::move(group)), counts_(static_cast<std::size_t>(group_.order()), 0) {}

GSequence::GSequence(FiniteAbelianGroup group, std::vector<std::int64_t> counts)
    : group_(std::move(group)), counts_(std::move(counts)) {
    if (counts_.size() != static_cast<std::size_t>(group_.order()))
        throw std::invalid_argument("GSequence: count vector length must equal |G|");
    for (auto c : counts_) {
        if (c < 0)
            throw std::invalid_argument("GSequence: negative multiplicity");
        length_ += c;
    }
}

GSequence GSequence::from_indices(FiniteAbelianGroup group, std::span<const std::int64_t> indices) {
    GSequence s(std::move(group));
    for (auto i : indices)
        s.add(i);
    return s;
}

GSequence GSequence::from_elements(FiniteAbelianGroup group, std::span<const GroupElement> elements) {
    GSequence s(group);
    for (const auto& g : elements) {
        if (!(g.group() == group))
            throw std::invalid_argument("GSequence: element from a different group");
        s.add(g.index());
    }
    return s;
}

void GSequence::add(std::int64_t index, std::int64_t times) {
    if (index < 0 || index >= group_.order())
        throw std::out_of_range("GSequence: element index out of range");
    if (times < 0)
        throw std::invalid_argument("GSequence::add: negative count");
    counts_[static_cast<std::size_t>(index)] += times;
    length_ += times;
}

void GSequence::remove(std::int64_t index, std::int64_t times) {
    if (index < 0 || index >= group_.order())
        throw std::out_of_range("GSequence: element index out of range");
    auto& c = counts_[static_cast<std::size_t>(index)];
    if (times < 0 || times > c)
        throw std::invalid_argument("GSequence::remove: multiplicity underflow");
    c -= times;
    length_ -= times;
}

std::int64_t GSequence::sum_index() const {
    const auto& f = group_.factors();
    std::vector<std::int64_t> total(f.size(), 0);
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] == 0)
            continue;
        const auto c = group_.coords_of(static_cast<std::int64_t>(i));
        for (std::size_t k = 0; k < f.size(); ++k)
            total[k] = static_cast<std::int64_t>((total[k] + static_cast<__int128>(c[k]) * counts_[i]) % f[k]);
    }
    return group_.index_of(total);
}

GroupElement GSequence::sum() const { return group_.from_index(sum_index()); }

std::vector<std::int64_t> GSequence::to_indices() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(length_));
    for (std::size_t i = 0; i < counts_.size(); ++i)
        for (std::int64_t k = 0; k < counts_[i]; ++k)
            out.push_back(static_cast<std::int64_t>(i));
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> GSequence::support() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] > 0)
            out.emplace_back(static_cast<std::int64_t>(i), counts_[i]);
    return out;
}

bool GSequence::contains(const GSequence& part) const {
    if (!(part.group_ == group_))
        return false;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (part.counts_[i] > counts_[i])
            return false;
    return true;
}

std::string GSequence::to_string() const {
    std::string out = "[";
    bool first = true;
    for (auto [index, count] : support()) {
        if (!first)
            out += ", ";
        first = false;
        out += "(";
        const auto c = group_.coords_of(index);
        for (std::size_t k = 0; k < c.size(); ++k)
            out += (k ? "," : "") + std::to_string(c[k]);
        out += ")";
        if (count > 1)
            out += "^" + std::to_string(count);
    }
    return out + "]";
}

} // namespace zsw
