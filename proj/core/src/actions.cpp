#include "egrp/actions.hpp"

#include <algorithm>

#include "egrp/errors.hpp"

namespace egrp
{

GroupAction GroupAction::from_generator_perms(FiniteGroup G, std::size_t n,
                                              std::span<Perm const> perms)
{
  if (n == 0)
    throw InvalidAction("acted-on set must be nonempty");
  if (perms.size() != G.generators().size())
    throw InvalidAction("expected one permutation per generator");
  for (auto const &p : perms) {
    if (p.degree() != n)
      throw InvalidAction("action permutation has degree " +
                          std::to_string(p.degree()) + ", expected " +
                          std::to_string(n));
  }

  std::vector<Point> table(G.order() * n);
  for (Point x = 0; x < n; ++x)
    table[x] = x;

  for (Elem i = 1; i < G.order(); ++i) {
    auto const &p = perms[G.word_generator(i)];
    Point const *prev = &table[G.word_parent(i) * n];
    Point *row = &table[static_cast<std::size_t>(i) * n];
    for (Point x = 0; x < n; ++x)
      row[x] = p[prev[x]];
  }

  auto const &gens = G.generator_indices();
  for (Elem y = 0; y < G.order(); ++y) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Point const *lhs = &table[G.mul(gens[s], y) * n];
      Point const *rhs = &table[static_cast<std::size_t>(y) * n];
      for (Point x = 0; x < n; ++x) {
        if (lhs[x] != perms[s][rhs[x]])
          throw InvalidAction("permutations do not define a group action");
      }
    }
  }

  return GroupAction(std::move(G), n, std::move(table));
}

GroupAction GroupAction::natural(FiniteGroup G)
{
  auto const perms = G.generators();
  auto const n = G.degree();
  return from_generator_perms(std::move(G), n, perms);
}

GroupAction GroupAction::trivial(FiniteGroup G, std::size_t set_size)
{
  std::vector<Perm> perms(G.generators().size(), Perm(set_size));
  return from_generator_perms(std::move(G), set_size, perms);
}

bool GroupAction::satisfies_law_exhaustively() const
{
  for (Point x = 0; x < _set_size; ++x) {
    if (act(identity_elem, x) != x)
      return false;
  }
  for (Elem g = 0; g < _group.order(); ++g) {
    for (Elem h = 0; h < _group.order(); ++h) {
      Elem const gh = _group.mul(g, h);
      for (Point x = 0; x < _set_size; ++x) {
        if (act(gh, x) != act(g, act(h, x)))
          return false;
      }
    }
  }
  return true;
}

Subgroup kernel(GroupAction const &f)
{
  auto const &G = f.group();
  std::vector<Elem> members;
  for (Elem g = 0; g < G.order(); ++g) {
    bool fixes_all = true;
    for (Point x = 0; x < f.set_size() && fixes_all; ++x)
      fixes_all = f.act(g, x) == x;
    if (fixes_all)
      members.push_back(g);
  }
  return Subgroup(G, std::move(members), true);
}

Subgroup stabilizer(GroupAction const &f, Point x, Subgroup const &within)
{
  std::vector<Elem> members;
  for (Elem g : within.members()) {
    if (f.act(g, x) == x)
      members.push_back(g);
  }
  return Subgroup(f.group(), std::move(members));
}

std::vector<Point> fixed_points(GroupAction const &f, Subgroup const &S)
{
  std::vector<Point> result;
  for (Point x = 0; x < f.set_size(); ++x) {
    bool fixed = std::all_of(S.members().begin(), S.members().end(),
                             [&](Elem g) { return f.act(g, x) == x; });
    if (fixed)
      result.push_back(x);
  }
  return result;
}

GroupAction coset_action(Subgroup const &S, Limits const &limits)
{
  auto const &G = S.parent();

  if (S.index() > limits.max_order)
    throw OrderBoundExceeded("coset action index exceeds maximal order",
                             limits.max_order);

  constexpr Elem unassigned = ~Elem{0};
  std::vector<Elem> coset_of(G.order(), unassigned);
  std::vector<Elem> reps;

  for (Elem g = 0; g < G.order(); ++g) {
    if (coset_of[g] != unassigned)
      continue;
    auto const c = static_cast<Elem>(reps.size());
    reps.push_back(g);
    for (Elem s : S.members())
      coset_of[G.mul(g, s)] = c;
  }

  std::vector<Perm> perms;
  for (Elem x : G.generator_indices()) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = coset_of[G.mul(x, reps[c])];
    perms.emplace_back(std::move(images));
  }

  return GroupAction::from_generator_perms(G, reps.size(), perms);
}

std::variant<EssentialCertificate, ConditionFailed>
khma_certify(Subgroup const &H, GroupAction const &f)
{
  auto const &G = H.parent();
  if (G.is_trivial())
    throw PreconditionFailed("the acting group must be nontrivial");

  std::vector<Subgroup> stabs;
  stabs.reserve(f.set_size());
  for (Point x = 0; x < f.set_size(); ++x)
    stabs.push_back(stabilizer(f, x, H));

  for (Point x = 0; x < f.set_size(); ++x) {
    for (Point y = 0; y < f.set_size(); ++y) {
      if (x != y && stabs[x].is_subset_of(stabs[y]))
        return ConditionFailed{x, y};
    }
  }

  auto K = join(normal_closure(H), kernel(f));
  return is_essential(Subgroup(G, K.members(), true));
}

bool is_self_normalizing(Subgroup const &S)
{ return normalizer(S).order() == S.order(); }

bool is_malnormal(Subgroup const &S)
{
  auto const &G = S.parent();
  for (Elem g = 0; g < G.order(); ++g) {
    if (S.contains(g))
      continue;
    for (Elem s : S.members()) {
      if (s != identity_elem && S.contains(G.conj(g, s)))
        return false;
    }
  }
  return true;
}

namespace
{

ClosureOutcome closure_outcome(Subgroup const &S)
{
  auto H = normal_closure(S);
  if (H.is_whole())
    return WholeGroup{};
  return is_essential(H);
}

} // anonymous namespace

ClosureOutcome babcho_certify(Subgroup const &S)
{
  if (S.parent().is_trivial())
    throw PreconditionFailed("the ambient group must be nontrivial");
  if (!is_self_normalizing(S))
    throw PreconditionFailed("subgroup is not self-normalizing");
  return closure_outcome(S);
}

ClosureOutcome malnormal_certify(Subgroup const &S)
{
  if (S.is_trivial())
    throw PreconditionFailed("subgroup must be nontrivial");
  if (!is_malnormal(S))
    throw PreconditionFailed("subgroup is not malnormal");
  return closure_outcome(S);
}

} // namespace egrp
