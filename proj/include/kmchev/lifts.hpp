#pragma once

#include <stdexcept>

#include "kmchev/weyl.hpp"

namespace kmchev {

/// Raised when a lift is requested outside its domain.
class LiftPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bruhat-minimum of {w >= v : w W_J = tau}.  Requires v W_J <= tau.
WeylElt up(const WeylGroup& g, const WeylElt& v, const Coset& tau);

/// Bruhat-maximum of {v <= w : v W_J = tau}.  Requires tau <= w W_J.
WeylElt down(const WeylGroup& g, const WeylElt& w, const Coset& tau);

/// Exhaustive search of the ball of length search_bound.
WeylElt up_oracle(const WeylGroup& g, const WeylElt& v, const Coset& tau, int search_bound);
/// Exhaustive search of the ball of length l(w).
WeylElt down_oracle(const WeylGroup& g, const WeylElt& w, const Coset& tau);

}  // namespace kmchev
