#ifndef EGRP_SRC_GROUP_DATA_HPP
#define EGRP_SRC_GROUP_DATA_HPP

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "egrp/group.hpp"

namespace egrp::detail
{

struct ClassCache;
struct LatticeCache;

struct GroupData
{
  std::size_t degree = 1;
  std::vector<Perm> generators;
  std::vector<Elem> generator_indices;

  std::vector<Perm> elements;
  std::unordered_map<Perm, Elem, PermHash> index;

  std::vector<Elem> mul;  // row-major, order * order
  std::vector<Elem> inv;
  std::vector<std::uint32_t> orders;

  std::vector<Elem> word_parent;
  std::vector<std::uint32_t> word_generator;

  std::uint64_t fingerprint = 0;
  bool abelian = true;

  // Compute-once caches filled by the lattice module.
  mutable std::once_flag classes_once;
  mutable std::shared_ptr<ClassCache const> classes;
  mutable std::once_flag lattice_once;
  mutable std::shared_ptr<LatticeCache const> lattice;
};

} // namespace egrp::detail

#endif // EGRP_SRC_GROUP_DATA_HPP
