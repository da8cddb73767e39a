#include "guilbaud/coalition.hpp"

#include <bit>
#include <stdexcept>

namespace guilbaud {

Assembly::Assembly(int size) : size_(size) {
  if (size < 1 || size > kMaxSize) {
    throw std::invalid_argument("assembly size must be in 1..64, got " +
                                std::to_string(size));
  }
}

Coalition::Coalition(Assembly assembly, std::uint64_t bits)
    : assembly_(assembly), bits_(bits) {
  if ((bits & ~assembly.full_mask()) != 0) {
    throw std::invalid_argument("coalition names a member outside the assembly");
  }
}

Coalition Coalition::of(Assembly assembly, std::span<const int> members) {
  std::uint64_t bits = 0;
  for (int m : members) {
    if (m < 0 || m >= assembly.size()) {
      throw std::invalid_argument("member index " + std::to_string(m) +
                                  " out of range for assembly of size " +
                                  std::to_string(assembly.size()));
    }
    bits |= std::uint64_t{1} << m;
  }
  return Coalition(assembly, bits, Trusted{});
}

bool Coalition::contains(int member) const {
  if (member < 0 || member >= assembly_.size()) return false;
  return (bits_ >> member) & 1U;
}

int Coalition::size() const noexcept { return std::popcount(bits_); }

void Coalition::require_same_assembly(const Coalition& other) const {
  if (assembly_ != other.assembly_) {
    throw std::invalid_argument("coalitions belong to different assemblies");
  }
}

bool Coalition::is_subset_of(const Coalition& other) const {
  require_same_assembly(other);
  return (bits_ & ~other.bits_) == 0;
}

bool Coalition::intersects(const Coalition& other) const {
  require_same_assembly(other);
  return (bits_ & other.bits_) != 0;
}

Coalition Coalition::operator|(const Coalition& other) const {
  require_same_assembly(other);
  return Coalition(assembly_, bits_ | other.bits_, Trusted{});
}

Coalition Coalition::operator&(const Coalition& other) const {
  require_same_assembly(other);
  return Coalition(assembly_, bits_ & other.bits_, Trusted{});
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string to_string(const Coalition& coalition) {
  std::string out = "{";
  bool first = true;
  for (int m : coalition.members()) {
    if (!first) out += ',';
    out += std::to_string(m);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace guilbaud
