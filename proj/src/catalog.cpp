#include "bcr/catalog.hpp"

#include "bcr/errors.hpp"

namespace bcr {

namespace {

SeifertBlock block(std::vector<std::vector<Rat>> v_plus) {
  RatMatrix vp(std::move(v_plus));
  RatMatrix vm = vp + RatMatrix::identity(vp.rows());
  return SeifertBlock{vp, vm};
}

SeifertBlock block_pair(std::vector<std::vector<Rat>> v_plus,
                        std::vector<std::vector<Rat>> v_minus) {
  return SeifertBlock{RatMatrix(std::move(v_plus)), RatMatrix(std::move(v_minus))};
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;

  out.push_back({"unknot",
                 "trivial knot; empty pairing matrices in every degree (dimension "
                 "parameter configurable with --n, default 1)",
                 unknot_data(1)});

  {
    SeifertData d;
    d.n = 1;
    d.integral = true;
    d.blocks = {block({{Rat(-1), Rat(1)}, {Rat(-1), Rat(0)}})};
    out.push_back({"trefoil",
                   "trefoil knot (n = 1); genus-one pairing with determinant polynomial "
                   "t - 1 + t^-1",
                   std::move(d)});
  }

  {
    SeifertData d;
    d.n = 1;
    d.integral = true;
    d.blocks = {block({{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}})};
    out.push_back({"figure-eight",
                   "figure-eight knot (n = 1); determinant polynomial -t + 3 - t^-1",
                   std::move(d)});
  }

  {
    // A 3-sphere in the 5-sphere modelled on the trefoil pairing: the
    // degree-1 block is the trefoil block, the degree-3 block is its
    // duality partner W^{+/-} = -transpose(V^{-/+}), and the middle degree
    // is empty.
    SeifertData d;
    d.n = 3;
    d.integral = true;
    d.blocks = {block({{Rat(-1), Rat(1)}, {Rat(-1), Rat(0)}}),
                SeifertBlock{RatMatrix(0, 0), RatMatrix(0, 0)},
                block_pair({{Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}},
                           {{Rat(1), Rat(1)}, {Rat(-1), Rat(0)}})};
    out.push_back({"trefoil-n3",
                   "trefoil pairing promoted to n = 3: trefoil block in degree 1, its "
                   "duality partner in degree 3",
                   std::move(d)});
  }

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

SeifertData unknot_data(unsigned n) {
  if (n == 0) throw validation_error("the dimension parameter n must be >= 1");
  SeifertData d;
  d.n = n;
  d.integral = n >= 2;
  d.blocks.assign(n, SeifertBlock{RatMatrix(0, 0), RatMatrix(0, 0)});
  return d;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  std::string names;
  for (const auto& e : catalog_entries()) {
    if (!names.empty()) names += ", ";
    names += e.name;
  }
  throw validation_error("unknown catalog entry '" + name + "' (available: " + names + ")");
}

}  // namespace bcr
