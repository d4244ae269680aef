#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trs/construct.hpp"

namespace trs {

struct RsDecoding {
  std::vector<Elem> codeword;
  Poly message;  // degree < k
  std::size_t distance = 0;
};

/// Unique decoding of the RS code ev(deg < k) at alpha. Infinity carries the
/// x^(k-1) coefficient. Returns the codeword within distance tau if any.
std::optional<RsDecoding> rs_decode(const Field& f, std::span<const EvalPoint> alpha, unsigned k,
                                    std::span<const Elem> received, unsigned tau);

std::vector<Elem> encode(const TwistedCodeSpec& spec, std::span<const Elem> message);

struct DecodeCandidate {
  std::vector<Elem> codeword;
  std::vector<Elem> message;  // a_0 .. a_{k-1}
  Elem guess = kZero;         // hook coefficient a_h
  std::size_t distance = 0;
};

struct DecodeResult {
  std::vector<DecodeCandidate> candidates;  // sorted by (distance, guess)
  std::size_t hook_guesses = 0;
  std::size_t rs_calls = 0;
};

/// Tries every value of the hook coefficient, strips the twist and RS-decodes.
/// Returns every distinct codeword found within distance tau of `received`.
DecodeResult twisted_decode(const TwistedCodeSpec& spec, std::span<const Elem> received, unsigned tau);

std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b);

}  // namespace trs
