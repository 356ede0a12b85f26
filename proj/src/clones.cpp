// SPDX-License-Identifier: Apache-2.0

#include "plint/clones.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <tuple>
#include <stdexcept>
#include <unordered_map>

#include "plint/error.hpp"

namespace plint::metrics {

namespace {

std::string fnv1a_hex(const std::vector<std::string>& symbols) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const std::string& s : symbols) {
    for (char c : s) mix(static_cast<unsigned char>(c));
    mix(0);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Position {
  std::size_t method;
  std::size_t offset;
};

}  // namespace

std::string normalized_symbol(const NormalizedToken& token) {
  if (token.token_class == "ID" || token.token_class == "LIT") return token.token_class;
  return token.lexeme;
}

std::vector<MethodTokens> method_token_sequences(const CodeModel& model) {
  std::vector<MethodTokens> out;
  for (const Entity& e : model.entities()) {
    if (!e.method || !e.method->body) continue;
    if (!e.method->body->normalized_tokens) {
      throw TokensUnavailable("no normalized tokens for " + e.id.str());
    }
    out.push_back(MethodTokens{e.id, *e.method->body->normalized_tokens});
  }
  return out;
}

std::vector<CloneClass> detect_clones(std::span<const MethodTokens> methods, std::size_t min_len) {
  if (min_len == 0) throw std::invalid_argument("min_len must be at least 1");

  // Intern symbols and lay all methods out in one array. Each method ends in
  // a distinct negative sentinel so no comparison runs across a boundary.
  std::unordered_map<std::string, std::int64_t> intern;
  std::vector<std::int64_t> text;
  std::vector<Position> where;
  std::vector<std::size_t> start(methods.size());
  for (std::size_t m = 0; m < methods.size(); ++m) {
    start[m] = text.size();
    for (std::size_t k = 0; k < methods[m].tokens.size(); ++k) {
      auto [it, _] = intern.emplace(normalized_symbol(methods[m].tokens[k]),
                                    static_cast<std::int64_t>(intern.size()) + 1);
      text.push_back(it->second);
      where.push_back({m, k});
    }
    text.push_back(-static_cast<std::int64_t>(m) - 1);
    where.push_back({m, methods[m].tokens.size()});
  }

  auto lcp = [&](std::size_t a, std::size_t b) {
    std::size_t k = 0;
    while (text[a + k] >= 0 && text[a + k] == text[b + k]) ++k;
    return k;
  };
  auto suffix_less = [&](std::size_t a, std::size_t b) {
    const std::size_t k = lcp(a, b);
    return text[a + k] < text[b + k];
  };

  // Candidate windows by polynomial rolling hash.
  constexpr std::uint64_t kBase = 1000003ULL;
  std::uint64_t top = 1;
  for (std::size_t i = 1; i < min_len; ++i) top *= kBase;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (std::size_t m = 0; m < methods.size(); ++m) {
    const std::size_t len = methods[m].tokens.size();
    if (len < min_len) continue;
    std::uint64_t h = 0;
    for (std::size_t k = 0; k < len; ++k) {
      if (k >= min_len) h -= static_cast<std::uint64_t>(text[start[m] + k - min_len]) * top;
      h = h * kBase + static_cast<std::uint64_t>(text[start[m] + k]);
      if (k + 1 >= min_len) buckets[h].push_back(start[m] + k + 1 - min_len);
    }
  }

  std::vector<CloneClass> out;
  auto emit = [&](const std::vector<std::size_t>& occ, std::size_t length) {
    // Left-maximality: some occurrence starts its method or differs on the
    // preceding token.
    bool extendable = true;
    for (std::size_t p : occ) {
      if (where[p].offset == 0 || text[p - 1] != text[occ.front() - 1]) {
        extendable = false;
        break;
      }
    }
    if (extendable) return;

    std::map<std::size_t, std::vector<std::size_t>> by_method;
    for (std::size_t p : occ) by_method[where[p].method].push_back(where[p].offset);
    bool keep = by_method.size() >= 2;
    for (auto& [_, offs] : by_method) {
      std::sort(offs.begin(), offs.end());
      if (offs.back() - offs.front() >= length) keep = true;
    }
    if (!keep) return;

    CloneClass cc;
    cc.length = length;
    for (std::size_t p : occ) {
      const MethodTokens& mt = methods[where[p].method];
      const std::size_t off = where[p].offset;
      cc.instances.push_back(
          {mt.method, mt.tokens[off].line, mt.tokens[off + length - 1].line, off});
    }
    std::sort(cc.instances.begin(), cc.instances.end(), [](const auto& a, const auto& b) {
      return std::tie(a.method, a.offset) < std::tie(b.method, b.offset);
    });
    std::vector<std::string> symbols;
    const MethodTokens& first = methods[where[occ.front()].method];
    for (std::size_t k = 0; k < length; ++k) {
      symbols.push_back(normalized_symbol(first.tokens[where[occ.front()].offset + k]));
    }
    cc.normalized_sequence_hash = fnv1a_hex(symbols);
    out.push_back(std::move(cc));
  };

  for (auto& [_, positions] : buckets) {
    if (positions.size() < 2) continue;
    std::sort(positions.begin(), positions.end(), suffix_less);
    // Split into seed classes whose first min_len tokens are truly equal.
    std::size_t lo = 0;
    while (lo < positions.size()) {
      std::size_t hi = lo + 1;
      std::vector<std::size_t> adj;  // adj[k] = lcp(positions[lo+k], positions[lo+k+1])
      while (hi < positions.size()) {
        const std::size_t l = lcp(positions[hi - 1], positions[hi]);
        if (l < min_len) break;
        adj.push_back(l);
        ++hi;
      }
      if (hi - lo >= 2) {
        // LCP-interval enumeration; every interval value is >= min_len.
        struct Open {
          std::size_t value;
          std::size_t left;
        };
        std::vector<Open> stack{{0, 0}};
        for (std::size_t k = 1; k <= adj.size() + 1; ++k) {
          const std::size_t cur = k <= adj.size() ? adj[k - 1] : 0;
          std::size_t left = k - 1;
          while (cur < stack.back().value) {
            const Open top_iv = stack.back();
            stack.pop_back();
            std::vector<std::size_t> occ(positions.begin() + static_cast<std::ptrdiff_t>(lo + top_iv.left),
                                         positions.begin() + static_cast<std::ptrdiff_t>(lo + k));
            emit(occ, top_iv.value);
            left = top_iv.left;
          }
          if (cur > stack.back().value) stack.push_back({cur, left});
        }
      }
      lo = hi;
    }
  }

  std::sort(out.begin(), out.end(), [](const CloneClass& a, const CloneClass& b) {
    if (a.instances != b.instances) return a.instances < b.instances;
    return a.length < b.length;
  });
  return out;
}

}  // namespace plint::metrics
