#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vdoodle/switch_table.hpp"

namespace vdoodle {

// One passage through a real crossing. A prime mark on an occurrence flips
// the handedness bit of its crossing; a crossing is negative when exactly
// one of its two occurrences is primed (the Gauss-word exponent notation
// "a b c b' a' c'" marks second occurrences).
struct Visit {
    std::string symbol;
    bool primed = false;

    bool operator==(const Visit&) const = default;
    auto operator<=>(const Visit&) const = default;
};

struct Semiarc {
    int id;            // global index, traversal order
    int component;
    int from_visit;    // position whose outgoing side starts this arc; -1 for a crossing-free loop
    int to_visit;      // position this arc runs into; -1 for a crossing-free loop
};

struct Transit {
    int in;   // semiarc ids
    int out;
};

struct CrossingTransits {
    std::string symbol;
    Transit transit1;  // first occurrence in traversal order
    Transit transit2;
    int sign;          // +1 or -1
};

// A virtual diagram modulo virtual moves: visit sequences of the real
// crossings on oriented closed components. Every symbol occurs exactly twice.
class GaussCode {
  public:
    GaussCode() = default;
    explicit GaussCode(std::vector<std::vector<Visit>> components);

    const std::vector<std::vector<Visit>>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    int crossing_count() const;
    int semiarc_count() const;

    std::vector<Semiarc> semiarcs() const;
    std::vector<CrossingTransits> crossings() const;  // sorted by first occurrence

    bool operator==(const GaussCode&) const = default;

  private:
    std::vector<std::vector<Visit>> components_;
};

// Grammar: components separated by '/'; visits are whitespace-separated
// identifiers, optionally suffixed with '; the token 'o' is a crossing-free
// component. Throws ParseError on symbols not occurring exactly twice.
GaussCode parse_gauss(const std::string& text);
std::string serialize_gauss(const GaussCode& code);

GaussCode load_gauss(const std::string& path);

// Alphabet-renaming concatenation.
GaussCode disjoint_union(const GaussCode& a, const GaussCode& b);

// Minimal representative under component rotation, component permutation and
// relabeling in first-visit order; negative crossings normalize to a prime
// on the second occurrence. Idempotent.
GaussCode canonical_form(const GaussCode& code);

}  // namespace vdoodle
