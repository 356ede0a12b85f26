// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_CLONES_HPP
#define PLINT_CLONES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "plint/code_model.hpp"

namespace plint::metrics {

struct CloneInstance {
  EntityId method;
  int start_line = 0;
  int end_line = 0;
  std::size_t offset = 0;  // token index into the method's sequence

  auto operator<=>(const CloneInstance&) const = default;
};

struct CloneClass {
  std::size_t length = 0;
  std::vector<CloneInstance> instances;  // sorted by (method, offset)
  std::string normalized_sequence_hash;  // 16 hex digits, FNV-1a 64

  bool operator==(const CloneClass&) const = default;
};

struct MethodTokens {
  EntityId method;
  std::vector<NormalizedToken> tokens;
};

/// Comparison symbol: "ID" and "LIT" for identifiers and literals, the
/// lexeme for everything else.
std::string normalized_symbol(const NormalizedToken& token);

/// Token sequences of every method with a body, in id order. Throws
/// TokensUnavailable if any body lacks normalized tokens.
std::vector<MethodTokens> method_token_sequences(const CodeModel& model);

/// All maximal type-2 clone classes of at least `min_len` tokens. A class
/// is every occurrence of a repeated sequence that cannot be extended left
/// or right as a whole, kept when its occurrences span two methods or
/// include two non-overlapping positions. Rolling-hash windows propose
/// candidates; exact token comparison confirms them.
std::vector<CloneClass> detect_clones(std::span<const MethodTokens> methods, std::size_t min_len);

}  // namespace plint::metrics

#endif  // PLINT_CLONES_HPP
