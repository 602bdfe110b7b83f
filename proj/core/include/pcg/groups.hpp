#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pcg/numth.hpp"

namespace pcg {

enum class Family { Cyclic, Dihedral, Dicyclic, Semidihedral, Explicit };

std::string_view to_string(Family family);
/// Parses "cyclic", "dihedral", "dicyclic", "semidihedral" (case-insensitive).
/// Throws std::invalid_argument for anything else.
Family parse_family(std::string_view name);

enum class LagrangeCheck {
  Warn,    ///< orders not dividing |G| are recorded as warnings
  Strict,  ///< orders not dividing |G| are rejected
};

/// A finite group described either by one of the four presented families or
/// by the list of its element orders.
///
///   Cyclic(n)        Z_n    = <a | a^n = 1>,                          n >= 1
///   Dihedral(n)      D_2n   = <a, b | a^n = b^2 = 1, bab^-1 = a^-1>,  n >= 3
///   Dicyclic(n)      Q_4n   = <a, b | a^2n = 1, b^2 = a^n, bab^-1 = a^-1>, n >= 3
///   Semidihedral(n)  SD_8n  = <a, b | a^4n = b^2 = 1, bab^-1 = a^(2n-1)>, n >= 3
class GroupSpec {
 public:
  static GroupSpec cyclic(u64 n);
  static GroupSpec dihedral(u64 n);
  static GroupSpec dicyclic(u64 n);
  static GroupSpec semidihedral(u64 n);
  static GroupSpec make(Family family, u64 n);

  /// The list must be nonempty, start with the identity (order 1), contain
  /// no other order-1 entry, and hold positive orders only.
  static GroupSpec explicit_orders(std::vector<u64> orders,
                                   LagrangeCheck check = LagrangeCheck::Warn);

  Family family() const { return family_; }
  /// The family parameter n; the list length for explicit groups.
  u64 parameter() const { return parameter_; }
  /// |G|.
  u64 order() const { return order_; }
  /// Element orders of an explicit group; empty for presented families.
  const std::vector<u64>& explicit_order_list() const { return orders_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Conventional name: Z_n, D_2n, Q_4n, SD_8n or G_m for explicit groups.
  std::string name() const;

 private:
  GroupSpec(Family family, u64 parameter, u64 order)
      : family_(family), parameter_(parameter), order_(order) {}

  Family family_;
  u64 parameter_;
  u64 order_;
  std::vector<u64> orders_;
  std::vector<std::string> warnings_;
};

/// Multiset of element orders: counts[d] is the number of elements of order d.
struct OrderProfile {
  u64 group_order = 0;
  std::map<u64, u64> counts;

  u64 count(u64 d) const;
  /// Distinct composite orders present, ascending.
  std::vector<u64> composite_orders() const;
  bool has_composite_order() const;

  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;
};

OrderProfile order_profile(const GroupSpec& spec);

/// |P(G)|: the identity plus all elements whose order is a prime dividing |G|.
u64 p_set_size(const OrderProfile& profile);

/// |I_d(G)|: elements whose order is divisible by the semiprime d. Throws
/// std::invalid_argument unless d is a semiprime divisor of |G|.
u64 i_d_size(const OrderProfile& profile, u64 d);

struct Element {
  std::string label;
  u64 order = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

inline constexpr u64 kDefaultEnumerationBound = 5000;

/// One entry per group element with its order. Presented families are listed
/// as a^0 .. a^(m-1) followed by the coset a^0*b .. a^(m-1)*b; explicit groups
/// as g0 .. g(k-1). Throws std::length_error when |G| exceeds max_order.
std::vector<Element> enumerate_elements(const GroupSpec& spec,
                                        u64 max_order = kDefaultEnumerationBound);

/// Reads an order list: one positive integer per line, first entry 1. Blank
/// lines and '#' comments are ignored. Throws std::invalid_argument on
/// malformed content.
std::vector<u64> parse_orders(std::istream& in);
/// Throws std::ios_base::failure when the file cannot be opened.
std::vector<u64> load_orders_file(const std::string& path);

}  // namespace pcg
