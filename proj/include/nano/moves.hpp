#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nano/nanophrase.hpp"

namespace nano {

/// Where and how a regular homotopy move applies to a signed word.
///
/// Forward moves 1 and 2 insert an opposite-sign pair A B at gaps `first`
/// <= `second` of the word (gap g sits before position g): move 1 gives
/// x A B y A B z, move 2 gives x A B y B A z. `sign` is the projection sign
/// of A; B gets the other one.
///
/// Inverse moves 1 and 2 delete such a pair; `first` and `second` are the
/// word positions where the two adjacent pairs start.
///
/// Move 3 (either direction) swaps three adjacent pairs starting at
/// positions `first`, `second`, `third`: forward matches x AB y AC z BC t,
/// inverse matches x BA y CA z CB t.
struct MoveSite {
    int move = 1;
    bool inverse = false;
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t third = 0;
    int sign = 1;

    bool operator==(const MoveSite&) const = default;
};

/// e.g. "1 (0,2,+)", "3^-1 (0,3,5)"
std::string describe(const MoveSite& site);

/// Every site of the given move in w, in a fixed order. w must be a
/// non-singular 1-component word over {+, -}.
std::vector<MoveSite> enumerate_move_sites(const Nanophrase& w, int move, bool inverse = false);

bool is_valid_site(const Nanophrase& w, const MoveSite& site);

/// Rewrites w. Inserted letters get fresh names; deleted letters vanish;
/// move 3 keeps every letter and projection.
Nanophrase apply_move(const Nanophrase& w, const MoveSite& site);

/// The site on apply_move(w, site) that undoes `site`.
MoveSite undo_site(const Nanophrase& w, const MoveSite& site);

struct SphericalSample {
    Nanophrase word;
    std::size_t start_index = 0;
    std::vector<MoveSite> trace;
};

/// Starts from standard_curve(start) and takes `steps` random moves or
/// inverse moves, choosing uniformly among the move kinds that have at least
/// one site keeping the word on the sphere (surface genus 0), then uniformly
/// among those sites. Deterministic in `seed`. A step with no admissible
/// site at all is skipped.
SphericalSample spherical_sampler(std::uint64_t seed, std::size_t steps, std::size_t start);

}  // namespace nano
