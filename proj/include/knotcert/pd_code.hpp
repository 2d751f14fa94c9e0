#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotcert {

/// Error thrown by the input parsers. position() is the byte offset into the
/// input text at which the problem was detected.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Raw planar-diagram code.
///
/// Each crossing is a 4-tuple of arc labels listed counterclockwise starting
/// from the incoming under-strand: the tuple (a, b, c, d) says the under
/// strand enters at a and leaves at c, while b and d hold the two over-strand
/// ends in counterclockwise order after a. Which of b, d is the incoming over
/// end is not stored; it is recovered by orientation propagation when the
/// code is turned into a diagram. Crossing-free circle components cannot be
/// expressed as tuples and are carried in free_loops instead.
///
/// Arc labels are positive integers; every label occurs exactly twice. Along
/// each link component the labels must form a consecutive ascending run
/// (checked during orientation), which is what standard published codes use.
struct PDCode {
  std::vector<std::array<std::int64_t, 4>> crossings;
  std::uint32_t free_loops = 0;
};

/// Parses the PD text grammar:
///
///   [FREE_LOOPS=<k>] X(a,b,c,d) X(a,b,c,d) ...
///
/// Terms are whitespace-separated; the optional header must come first.
/// Checks the double-occurrence rule and rejects an entirely empty diagram
/// (no crossings, free_loops == 0).
PDCode parse_pd(std::string_view text);

/// Braid word on strand_count strands. Letter +i crosses the strand in
/// position i over the strand in position i+1; letter -i crosses it under.
/// Positive letters produce positive crossings in the closure.
struct BraidWord {
  std::uint32_t strand_count = 1;
  std::vector<std::int32_t> letters;
};

/// Parses "BR(n; w1 w2 ... wm)". Letters are nonzero integers with
/// |w| < n, separated by whitespace. The word may be empty.
BraidWord parse_braid(std::string_view text);

/// One crossing passage of a Gauss code: crossing label, over/under tag and
/// the crossing sign carried by the token.
struct GaussPassage {
  std::int64_t label = 0;
  bool over = false;
  int sign = +1;
};

/// Signed Gauss code, one passage sequence per link component. An empty
/// passage sequence denotes a crossing-free circle.
struct GaussCode {
  std::vector<std::vector<GaussPassage>> components;
};

/// Parses per-component token strings like "O1+U2+O3+U1+O2+U3+", components
/// separated by ';'. Tokens are O<label><sign> / U<label><sign>; whitespace
/// between tokens is allowed. Every label must occur exactly twice, once
/// tagged O and once tagged U, and both occurrences must agree on the sign.
/// Empty input parses as one crossing-free component.
GaussCode parse_gauss(std::string_view text);

}  // namespace knotcert
