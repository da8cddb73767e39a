#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace guilbaud {

/// A finite assembly of voters, identified by dense indices 0..n-1.
///
/// The size is bounded by 64 so that every coalition fits in a single
/// machine word.
class Assembly {
 public:
  static constexpr int kMaxSize = 64;

  explicit Assembly(int size);

  int size() const noexcept { return size_; }

  /// Bit mask with one bit set for every member.
  std::uint64_t full_mask() const noexcept {
    return size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
  }

  friend bool operator==(Assembly, Assembly) = default;

 private:
  int size_;
};

/// A subset of an assembly.
class Coalition {
 public:
  /// Throws std::invalid_argument if `bits` names a member outside the assembly.
  Coalition(Assembly assembly, std::uint64_t bits);

  static Coalition empty(Assembly assembly) { return Coalition(assembly, 0); }
  static Coalition full(Assembly assembly) {
    return Coalition(assembly, assembly.full_mask());
  }
  static Coalition of(Assembly assembly, std::span<const int> members);
  static Coalition of(Assembly assembly, std::initializer_list<int> members) {
    return of(assembly, std::span<const int>(members.begin(), members.size()));
  }

  Assembly assembly() const noexcept { return assembly_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(int member) const;
  int size() const noexcept;
  bool is_empty() const noexcept { return bits_ == 0; }

  Coalition complement() const noexcept {
    return Coalition(assembly_, ~bits_ & assembly_.full_mask(), Trusted{});
  }

  bool is_subset_of(const Coalition& other) const;
  bool intersects(const Coalition& other) const;

  Coalition operator|(const Coalition& other) const;
  Coalition operator&(const Coalition& other) const;

  /// Members in increasing order.
  std::vector<int> members() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  struct Trusted {};
  Coalition(Assembly assembly, std::uint64_t bits, Trusted) noexcept
      : assembly_(assembly), bits_(bits) {}
  void require_same_assembly(const Coalition& other) const;

  Assembly assembly_;
  std::uint64_t bits_;
};

/// Sorted member list, e.g. "{0,2}" or "{}".
std::string to_string(const Coalition& coalition);

}  // namespace guilbaud
