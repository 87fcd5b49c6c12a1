#pragma once

#include <string>
#include <vector>

#include "symskew/errors.hpp"

namespace symskew {

/// Combinatorial data of an interval exchange: a pair of bijections from the
/// alphabet {0..d-1} to positions {0..d-1}. pi0 orders the intervals before
/// the exchange, pi1 after. Immutable after construction.
class Permutation {
  public:
    /// Validates that both rows are bijections onto {0..d-1}.
    Permutation(std::vector<int> pi0, std::vector<int> pi1);

    /// The symmetric permutation on d symbols: pi0 = id, pi1 = reversal.
    static Permutation symmetric(int d);

    int size() const { return d_; }
    int pos0(int symbol) const { return pi0_[symbol]; }
    int pos1(int symbol) const { return pi1_[symbol]; }
    int symbol_at_top(int pos) const { return top_at_[pos]; }
    int symbol_at_bottom(int pos) const { return bot_at_[pos]; }

    const std::vector<int>& pi0() const { return pi0_; }
    const std::vector<int>& pi1() const { return pi1_; }

    /// pi1(pi0^{-1}(k)) == d+1-k for every k (1-based), i.e. the exchange
    /// reverses the order of the intervals.
    bool is_symmetric() const;

    /// No proper prefix {1..k} of top positions maps onto {1..k} of bottom
    /// positions. Reducible data splits into two independent exchanges.
    bool is_irreducible() const;

    /// Combinatorial data of the inverse map: the rows swap.
    Permutation inverse() const { return Permutation(pi1_, pi0_); }

    /// Relabels symbols so that pi0 becomes the identity; the bottom row is
    /// rewritten accordingly. The exchange itself is unchanged.
    Permutation canonical() const;

    bool operator==(const Permutation& o) const { return pi0_ == o.pi0_ && pi1_ == o.pi1_; }

    /// "a,b,c|x,y,z" with 1-based positions, top row first.
    std::string to_string() const;
    static Permutation from_string(const std::string& s);

  private:
    int d_;
    std::vector<int> pi0_, pi1_;     // symbol -> position
    std::vector<int> top_at_, bot_at_; // position -> symbol
};

/// Convenience: forwards to Permutation::is_symmetric (the spec-level name).
inline bool is_symmetric(const Permutation& p) { return p.is_symmetric(); }

} // namespace symskew
