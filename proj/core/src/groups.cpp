#include "pcg/groups.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcg {

namespace {

void require_order_in_range(u64 order, const char* family) {
  if (order > kMaxArgument) {
    throw std::out_of_range(std::string(family) + ": group order exceeds 2^32");
  }
}

void add_cyclic_part(OrderProfile& profile, u64 m) {
  for (u64 d : divisors(m)) profile.counts[d] += euler_phi(d);
}

std::string power_label(u64 i) { return "a^" + std::to_string(i); }

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Dicyclic: return "dicyclic";
    case Family::Semidihedral: return "semidihedral";
    case Family::Explicit: return "explicit";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "cyclic") return Family::Cyclic;
  if (lower == "dihedral") return Family::Dihedral;
  if (lower == "dicyclic") return Family::Dicyclic;
  if (lower == "semidihedral") return Family::Semidihedral;
  throw std::invalid_argument("unknown group family '" + std::string(name) + "'");
}

GroupSpec GroupSpec::cyclic(u64 n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  require_order_in_range(n, "cyclic");
  return GroupSpec(Family::Cyclic, n, n);
}

GroupSpec GroupSpec::dihedral(u64 n) {
  if (n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
  require_order_in_range(2 * n, "dihedral");
  return GroupSpec(Family::Dihedral, n, 2 * n);
}

GroupSpec GroupSpec::dicyclic(u64 n) {
  if (n < 3) throw std::invalid_argument("dicyclic: n must be >= 3");
  require_order_in_range(4 * n, "dicyclic");
  return GroupSpec(Family::Dicyclic, n, 4 * n);
}

GroupSpec GroupSpec::semidihedral(u64 n) {
  if (n < 3) throw std::invalid_argument("semidihedral: n must be >= 3");
  require_order_in_range(8 * n, "semidihedral");
  return GroupSpec(Family::Semidihedral, n, 8 * n);
}

GroupSpec GroupSpec::make(Family family, u64 n) {
  switch (family) {
    case Family::Cyclic: return cyclic(n);
    case Family::Dihedral: return dihedral(n);
    case Family::Dicyclic: return dicyclic(n);
    case Family::Semidihedral: return semidihedral(n);
    case Family::Explicit: break;
  }
  throw std::invalid_argument("explicit groups need an order list");
}

GroupSpec GroupSpec::explicit_orders(std::vector<u64> orders, LagrangeCheck check) {
  if (orders.empty()) throw std::invalid_argument("explicit group: empty order list");
  if (orders.front() != 1) {
    throw std::invalid_argument("explicit group: first entry must be the identity (order 1)");
  }
  require_order_in_range(orders.size(), "explicit");
  const u64 group_order = orders.size();
  GroupSpec spec(Family::Explicit, group_order, group_order);
  for (std::size_t i = 1; i < orders.size(); ++i) {
    const u64 d = orders[i];
    if (d == 0) throw std::invalid_argument("explicit group: orders must be positive");
    if (d == 1) {
      throw std::invalid_argument("explicit group: entry " + std::to_string(i) +
                                  " has order 1 but only the identity may");
    }
    if (group_order % d != 0) {
      std::string msg = "order " + std::to_string(d) + " does not divide |G| = " +
                        std::to_string(group_order);
      if (check == LagrangeCheck::Strict) {
        throw std::invalid_argument("explicit group: " + msg);
      }
      if (std::find(spec.warnings_.begin(), spec.warnings_.end(), msg) == spec.warnings_.end()) {
        spec.warnings_.push_back(std::move(msg));
      }
    }
  }
  spec.orders_ = std::move(orders);
  return spec;
}

std::string GroupSpec::name() const {
  switch (family_) {
    case Family::Cyclic: return "Z_" + std::to_string(order_);
    case Family::Dihedral: return "D_" + std::to_string(order_);
    case Family::Dicyclic: return "Q_" + std::to_string(order_);
    case Family::Semidihedral: return "SD_" + std::to_string(order_);
    case Family::Explicit: return "G_" + std::to_string(order_);
  }
  return {};
}

u64 OrderProfile::count(u64 d) const {
  auto it = counts.find(d);
  return it == counts.end() ? 0 : it->second;
}

std::vector<u64> OrderProfile::composite_orders() const {
  std::vector<u64> out;
  for (const auto& [d, c] : counts) {
    if (c > 0 && is_composite(d)) out.push_back(d);
  }
  return out;
}

bool OrderProfile::has_composite_order() const {
  return std::any_of(counts.begin(), counts.end(),
                     [](const auto& kv) { return kv.second > 0 && is_composite(kv.first); });
}

OrderProfile order_profile(const GroupSpec& spec) {
  OrderProfile profile;
  profile.group_order = spec.order();
  const u64 n = spec.parameter();
  switch (spec.family()) {
    case Family::Cyclic:
      add_cyclic_part(profile, n);
      break;
    case Family::Dihedral:
      add_cyclic_part(profile, n);
      profile.counts[2] += n;
      break;
    case Family::Dicyclic:
      add_cyclic_part(profile, 2 * n);
      profile.counts[4] += 2 * n;
      break;
    case Family::Semidihedral:
      add_cyclic_part(profile, 4 * n);
      profile.counts[2] += 2 * n;
      profile.counts[4] += 2 * n;
      break;
    case Family::Explicit:
      for (u64 d : spec.explicit_order_list()) ++profile.counts[d];
      break;
  }
  return profile;
}

u64 p_set_size(const OrderProfile& profile) {
  u64 size = 1;
  for (const auto& pp : factorize(profile.group_order).powers()) {
    size += profile.count(pp.prime);
  }
  return size;
}

u64 i_d_size(const OrderProfile& profile, u64 d) {
  if (!is_semiprime(d) || profile.group_order % d != 0) {
    throw std::invalid_argument("i_d_size: " + std::to_string(d) +
                                " is not a semiprime divisor of " +
                                std::to_string(profile.group_order));
  }
  u64 total = 0;
  for (const auto& [order, c] : profile.counts) {
    if (order % d == 0) total += c;
  }
  return total;
}

std::vector<Element> enumerate_elements(const GroupSpec& spec, u64 max_order) {
  if (spec.order() > max_order) {
    throw std::length_error("enumerate_elements: |G| = " + std::to_string(spec.order()) +
                            " exceeds the bound " + std::to_string(max_order));
  }
  std::vector<Element> out;
  out.reserve(spec.order());
  if (spec.family() == Family::Explicit) {
    const auto& orders = spec.explicit_order_list();
    for (std::size_t i = 0; i < orders.size(); ++i) {
      out.push_back({"g" + std::to_string(i), orders[i]});
    }
    return out;
  }

  const u64 n = spec.parameter();
  u64 rotation_order = n;
  switch (spec.family()) {
    case Family::Dicyclic: rotation_order = 2 * n; break;
    case Family::Semidihedral: rotation_order = 4 * n; break;
    default: break;
  }
  for (u64 i = 0; i < rotation_order; ++i) {
    out.push_back({power_label(i), rotation_order / std::gcd(rotation_order, i)});
  }
  if (spec.family() == Family::Cyclic) return out;

  for (u64 i = 0; i < rotation_order; ++i) {
    u64 order = 2;
    if (spec.family() == Family::Dicyclic) {
      // (a^i b)^2 = b^2 = a^n, which has order 2
      order = 4;
    } else if (spec.family() == Family::Semidihedral) {
      // (a^i b)^2 = a^(2ni)
      order = (i % 2 == 0) ? 2 : 4;
    }
    out.push_back({power_label(i) + "*b", order});
  }
  return out;
}

std::vector<u64> parse_orders(std::istream& in) {
  std::vector<u64> orders;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::string extra;
    if (fields >> extra) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected a single order per line");
    }
    if (!std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": '" + token +
                                  "' is not a positive integer");
    }
    u64 value = 0;
    try {
      value = std::stoull(token);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": order too large");
    }
    if (value == 0) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": order must be positive");
    }
    orders.push_back(value);
  }
  if (orders.empty()) throw std::invalid_argument("order list is empty");
  if (orders.front() != 1) throw std::invalid_argument("first order must be 1 (identity)");
  return orders;
}

std::vector<u64> load_orders_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open orders file '" + path + "'");
  return parse_orders(in);
}

}  // namespace pcg
