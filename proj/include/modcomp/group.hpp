#ifndef MODCOMP_GROUP_HPP
#define MODCOMP_GROUP_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace modcomp {

/// Thrown on malformed input: bad cycle notation, non-group tables,
/// incompatible signatures, unknown presets.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a construction would exceed the configured group-order cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultOrderCap = 2000;

/// A finite group as an immutable multiplication structure.
///
/// Elements are integer ids 0..order()-1 with 0 the identity. Ids follow the
/// canonical ordering: sort by (element order, shortlex-minimal word over the
/// construction generators, construction index). Downstream lexicographic
/// representatives depend on this ordering, so its version tag and a
/// fingerprint are part of every report.
class GroupTable {
 public:
  static constexpr int identity = 0;

  GroupTable(std::string name,
             std::vector<int> mul_table,  // row-major order*order
             std::vector<std::string> generator_names,
             std::vector<int> generator_ids);

  int order() const { return order_; }
  const std::string& name() const { return name_; }

  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int g) const { return inv_[g]; }
  int conj(int g, int x) const {  // x g x^-1
    return mul(mul(x, g), inv_[x]);
  }
  int elem_order(int g) const { return elem_order_[g]; }

  /// Display word of an element over the construction generators ("1" for
  /// the identity, powers collapsed, e.g. "xy^2").
  const std::string& elem_name(int g) const { return elem_name_[g]; }

  const std::vector<int>& generators() const { return generator_ids_; }
  const std::vector<std::string>& generator_names() const {
    return generator_names_;
  }

  /// FNV-1a hash of the canonical ordering table, hex-encoded. Equal
  /// fingerprints mean element ids (hence lex-min representatives) agree.
  const std::string& ordering_fingerprint() const { return fingerprint_; }

  /// True iff the closure of `subset` under mul/inv is the whole group.
  bool generates(const std::vector<int>& subset) const;

  /// Closure of `subset` as a sorted id list.
  std::vector<int> closure(const std::vector<int>& subset) const;

 private:
  int order_;
  std::string name_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  std::vector<std::string> elem_name_;
  std::vector<std::string> generator_names_;
  std::vector<int> generator_ids_;
  std::string fingerprint_;
};

/// An automorphism realized as a permutation of element ids.
struct Automorphism {
  std::vector<int> image;
  int operator()(int g) const { return image[g]; }
  bool operator==(const Automorphism& o) const { return image == o.image; }
  bool operator<(const Automorphism& o) const { return image < o.image; }
};

/// How to build a group: exactly one of the three fields is used.
struct GroupSpec {
  std::string preset;                      // "sym3", "cyclic:13", ...
  std::vector<std::string> permutations;   // cycle notation, 1-based points
  std::vector<std::vector<int>> table;     // explicit row-major table
  int order_cap = kDefaultOrderCap;
};

/// Parse "(1,2,3)(4,5)" into a permutation of 0..n-1 (points above the
/// largest mentioned are allowed via `min_degree`). Cycles compose
/// rightmost-first; disjoint cycles are unaffected by this.
std::vector<int> parse_cycles(const std::string& text, int min_degree = 0);

GroupTable build_group(const GroupSpec& spec);

/// Convenience: "sym3", "cyclic:N", "alt5", "psl2_7", "sg21_1".
GroupTable build_preset(const std::string& token,
                        int order_cap = kDefaultOrderCap);

int element_order(const GroupTable& G, int g);

/// Complete automorphism list in deterministic (lex by image) order.
/// Candidate generator images are filtered by element order and extended by
/// word closure over the multiplication table.
std::vector<Automorphism> automorphisms(const GroupTable& G);

Automorphism inner_automorphism(const GroupTable& G, int x);

}  // namespace modcomp

#endif
