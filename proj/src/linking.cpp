#include "nano/linking.hpp"

#include <algorithm>

#include "nano/error.hpp"

namespace nano {

std::size_t LinkingMatrix::index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw DomainError("linking_matrix", "entry index out of range");
    if (i > j) std::swap(i, j);
    // Row-major upper triangle.
    return i * n_ - i * (i - 1) / 2 + (j - i);
}

void LinkingMatrix::add(std::size_t i, std::size_t j, SymbolId key, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto& entry = upper_[index(i, j)];
    auto [it, fresh] = entry.try_emplace(key, coefficient);
    if (!fresh && (it->second += coefficient) == 0) entry.erase(it);
}

bool LinkingMatrix::is_zero() const noexcept {
    return std::all_of(upper_.begin(), upper_.end(), [](const Entry& e) { return e.empty(); });
}

LinkingMatrix& LinkingMatrix::operator+=(const LinkingMatrix& other) {
    if (other.n_ != n_) throw DomainError("linking_matrix", "adding matrices of different sizes");
    for (std::size_t k = 0; k < upper_.size(); ++k) {
        for (const auto& [key, c] : other.upper_[k]) {
            auto [it, fresh] = upper_[k].try_emplace(key, c);
            if (!fresh && (it->second += c) == 0) upper_[k].erase(it);
        }
    }
    return *this;
}

LinkingMatrix& LinkingMatrix::operator-=(const LinkingMatrix& other) {
    if (other.n_ != n_) throw DomainError("linking_matrix", "subtracting matrices of different sizes");
    for (std::size_t k = 0; k < upper_.size(); ++k) {
        for (const auto& [key, c] : other.upper_[k]) {
            auto [it, fresh] = upper_[k].try_emplace(key, -c);
            if (!fresh && (it->second -= c) == 0) upper_[k].erase(it);
        }
    }
    return *this;
}

LinkingMatrix linking_matrix(const CanonicalForm& p, const Alphabet& alphabet) {
    if (p.singular_count() != 0) throw DomainError("linking_matrix", "input must be non-singular");
    std::vector<std::size_t> first_component(p.rank(), p.component_count());
    LinkingMatrix m(p.component_count());
    for (std::size_t c = 0; c < p.component_count(); ++c) {
        for (int id : p.skeleton()[c]) {
            auto& first = first_component[id];
            if (first == p.component_count()) {
                first = c;
                continue;
            }
            const SymbolId symbol = p.letters()[id].symbol;
            m.add(first, c, first == c ? alphabet.orbit_representative(symbol) : symbol, 1);
        }
    }
    return m;
}

DegreeOneValue universal_degree1(const CanonicalForm& p, const Alphabet& alphabet) {
    return {linking_matrix(p, alphabet), iota(p)};
}

}  // namespace nano
