#include "kantorlab/liealg.hpp"

#include <array>
#include <atomic>
#include <map>

namespace kantorlab {

const char* piece_name(Piece p) {
  switch (p) {
    case Piece::KMinus: return "K-";
    case Piece::VMinus: return "V-";
    case Piece::D: return "D";
    case Piece::VPlus: return "V+";
    case Piece::KPlus: return "K+";
    case Piece::Abstract: return "L";
  }
  return "?";
}

int piece_degree(Piece p) {
  switch (p) {
    case Piece::KMinus: return -2;
    case Piece::VMinus: return -1;
    case Piece::VPlus: return 1;
    case Piece::KPlus: return 2;
    default: return 0;
  }
}

namespace {

bool char_zero(const Scalar& s) { return s.storage().index() < 2; }

void add_block(Matrix& dst, std::size_t r0, std::size_t c0, const Scalar& s, const Matrix& src) {
  if (s.is_zero()) return;
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) {
      const Scalar& x = src(r, c);
      if (!x.is_zero()) dst(r0 + r, c0 + c) += s * x;
    }
}

SparseVec flatten_block(const Block& b) {
  Vector f = b.m.flatten();
  f.insert(f.end(), b.v.begin(), b.v.end());
  return sparse_of(f);
}

Vector sparse_accumulate(std::size_t n, const Scalar& proto, const SparseVec& a, const std::vector<SparseVec>& rows,
                         std::size_t stride, std::size_t col) {
  Vector out = zero_vector(n, proto);
  for (const auto& t : a)
    for (const auto& u : rows[t.index * stride + col]) out[u.index] += t.coeff * u.coeff;
  return out;
}

}  // namespace

Block vector_bracket(const KantorPair& p, const OperatorTables& ops, const Vector& x, const Vector& y) {
  std::size_t nm = p.dim(Sign::Minus), np = p.dim(Sign::Plus), n = nm + np;
  const Scalar& proto = p.proto();
  Matrix m(n, n, proto);
  auto xm = [&](std::size_t i) -> const Scalar& { return x[i]; };
  auto xp = [&](std::size_t i) -> const Scalar& { return x[nm + i]; };
  auto ym = [&](std::size_t i) -> const Scalar& { return y[i]; };
  auto yp = [&](std::size_t i) -> const Scalar& { return y[nm + i]; };
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      Scalar c = xm(i) * yp(j) - ym(i) * xp(j);
      add_block(m, 0, 0, c, ops.V(Sign::Minus, i, j));
    }
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j) add_block(m, 0, nm, xm(i) * ym(j), ops.K(Sign::Minus, i, j));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) add_block(m, nm, 0, xp(i) * yp(j), ops.K(Sign::Plus, i, j));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nm; ++j) {
      Scalar c = xp(i) * ym(j) - yp(i) * xm(j);
      add_block(m, nm, nm, c, ops.V(Sign::Plus, i, j));
    }
  return {std::move(m), zero_vector(n, proto)};
}

LiePtr LieAlgebra::kantor(const KantorPair& p) {
  auto l = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  l->pair_ = p;
  l->ops_ = std::make_shared<const OperatorTables>(operator_tables(p));
  l->proto_ = p.proto();
  std::size_t nm = p.dim(Sign::Minus), np = p.dim(Sign::Plus), n = nm + np;
  l->n_minus_ = nm;
  l->n_plus_ = np;
  const auto& ops = *l->ops_;
  const Scalar one = p.proto().one_like();
  auto name = [&](Sign s, std::size_t i) {
    if (p.carrier()) return p.carrier()->label(i);
    return std::string(sign_name(s)) + std::to_string(i);
  };

  EchelonBuilder eb(n * n + n);
  auto offer = [&](Witness w, Block b, std::string label) {
    Vector f = b.m.flatten();
    f.insert(f.end(), b.v.begin(), b.v.end());
    if (!eb.add(f)) return;
    l->witness_.push_back(w);
    l->labels_.push_back(std::move(label));
    l->blocks_.push_back(std::move(b));
  };
  auto empty = [&]() { return Block{Matrix(n, n, p.proto()), zero_vector(n, p.proto())}; };

  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = i + 1; j < nm; ++j) {
      Block b = empty();
      add_block(b.m, 0, nm, one, ops.K(Sign::Minus, i, j));
      offer({Piece::KMinus, i, j}, std::move(b), "K-(" + name(Sign::Minus, i) + "," + name(Sign::Minus, j) + ")");
    }
  for (std::size_t i = 0; i < nm; ++i) {
    Block b = empty();
    b.v[i] = one;
    offer({Piece::VMinus, i, 0}, std::move(b), name(Sign::Minus, i) + "-");
  }
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      Block b = empty();
      add_block(b.m, 0, 0, one, ops.V(Sign::Minus, i, j));
      add_block(b.m, nm, nm, -one, ops.V(Sign::Plus, j, i));
      offer({Piece::D, i, j}, std::move(b), "nu(" + name(Sign::Minus, i) + "," + name(Sign::Plus, j) + ")");
    }
  for (std::size_t i = 0; i < np; ++i) {
    Block b = empty();
    b.v[nm + i] = one;
    offer({Piece::VPlus, i, 0}, std::move(b), name(Sign::Plus, i) + "+");
  }
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = i + 1; j < np; ++j) {
      Block b = empty();
      add_block(b.m, nm, 0, one, ops.K(Sign::Plus, i, j));
      offer({Piece::KPlus, i, j}, std::move(b), "K+(" + name(Sign::Plus, i) + "," + name(Sign::Plus, j) + ")");
    }

  std::size_t d = l->blocks_.size();
  l->dim_ = d;
  std::vector<Vector> rows;
  for (const auto& b : l->blocks_) {
    l->flat_.push_back(flatten_block(b));
    Vector f = b.m.flatten();
    f.insert(f.end(), b.v.begin(), b.v.end());
    rows.push_back(std::move(f));
  }
  std::vector<int> deg;
  for (const auto& w : l->witness_) deg.push_back(piece_degree(w.piece));
  l->z_degree_ = deg;

  if (d > 0) {
    Matrix bm = Matrix::from_rows(rows);
    Matrix r = bm;
    l->pivots_ = rref(r);
    Matrix sub(d, d, p.proto());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) sub(i, k) = bm(i, l->pivots_[k]);
    l->coord_map_ = inverse(sub.transpose());
  }

  l->table_.assign(d * d, {});
  parallel_for(d * d, [&](std::size_t c) {
    std::size_t i = c / d, j = c % d;
    l->table_[c] = sparse_of(l->coords_of(l->block_bracket(l->blocks_[i], l->blocks_[j])));
  });
  return l;
}

LiePtr LieAlgebra::from_structure_constants(std::size_t dim, std::vector<SparseVec> table, Scalar proto,
                                            std::optional<std::vector<int>> z_degree,
                                            std::vector<std::string> labels) {
  if (table.size() != dim * dim) throw Error(Errc::BadDimension, "structure constant table size mismatch");
  if (z_degree && z_degree->size() != dim) throw Error(Errc::BadDimension, "degree list size mismatch");
  auto l = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  l->dim_ = dim;
  l->table_ = std::move(table);
  l->proto_ = proto.zero_like();
  l->z_degree_ = std::move(z_degree);
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  l->labels_ = std::move(labels);
  l->witness_.assign(dim, Witness{});
  return l;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(dim_, proto_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = bracket_terms(i, j);
      if (terms.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(dim_, dim_, proto_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, bracket(x, basis(j)));
  return m;
}

std::vector<std::size_t> LieAlgebra::component(int degree) const {
  if (!z_degree_) throw Error(Errc::GradingMissing, "algebra has no Z-grading");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim_; ++i)
    if ((*z_degree_)[i] == degree) out.push_back(i);
  return out;
}

const KantorPair& LieAlgebra::pair() const {
  if (!pair_) throw Error(Errc::PreconditionViolated, "algebra was not built by the Kantor construction");
  return *pair_;
}

Block LieAlgebra::realize(const Vector& coords) const {
  std::size_t n = n_minus_ + n_plus_;
  Block b{Matrix(n, n, proto_), zero_vector(n, proto_)};
  for (std::size_t i = 0; i < dim_; ++i) {
    if (coords[i].is_zero()) continue;
    b.m.add_scaled(coords[i], blocks_[i].m);
    axpy(b.v, coords[i], blocks_[i].v);
  }
  return b;
}

Vector LieAlgebra::coords_of(const Block& b) const {
  pair();
  std::size_t n = n_minus_ + n_plus_;
  const auto& md = b.m.data();
  auto at = [&](std::size_t k) -> const Scalar& { return k < n * n ? md[k] : b.v[k - n * n]; };
  Vector w(dim_, proto_);
  for (std::size_t k = 0; k < dim_; ++k) w[k] = at(pivots_[k]);
  Vector c = coord_map_.apply(w);
  Vector recon = zero_vector(n * n + n, proto_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (c[i].is_zero()) continue;
    for (const auto& t : flat_[i]) recon[t.index] += c[i] * t.coeff;
  }
  for (std::size_t k = 0; k < n * n + n; ++k)
    if (recon[k] != at(k)) throw Error(Errc::PreconditionViolated, "element is outside the Kantor algebra");
  return c;
}

Block LieAlgebra::block_bracket(const Block& x, const Block& y) const {
  Block b = vector_bracket(*pair_, *ops_, x.v, y.v);
  b.m = b.m + commutator(x.m, y.m);
  b.v = sub(x.m.apply(y.v), y.m.apply(x.v));
  return b;
}

Report verify_jacobi(const LieAlgebra& l, int jobs) {
  std::size_t d = l.dim();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) triples.push_back({i, j, k});
  std::vector<SparseVec> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = l.bracket_terms(i, j);
  const Scalar& proto = l.proto();
  Report r = run_cases(
      "jacobi", triples.size(),
      [&](std::size_t c) -> std::optional<std::string> {
        auto [i, j, k] = triples[c];
        Vector s = sparse_accumulate(d, proto, table[i * d + j], table, d, k);
        Vector t = sparse_accumulate(d, proto, table[j * d + k], table, d, i);
        Vector u = sparse_accumulate(d, proto, table[k * d + i], table, d, j);
        if (is_zero(add(add(s, t), u))) return std::nullopt;
        return l.label(i) + "," + l.label(j) + "," + l.label(k);
      },
      jobs);
  Report a = run_cases(
      "antisymmetry", d * d,
      [&](std::size_t c) -> std::optional<std::string> {
        std::size_t i = c / d, j = c % d;
        Vector x = zero_vector(d, proto), y = zero_vector(d, proto);
        for (const auto& t : table[i * d + j]) x[t.index] = t.coeff;
        for (const auto& t : table[j * d + i]) y[t.index] = t.coeff;
        if (is_zero(add(x, y))) return std::nullopt;
        return l.label(i) + "," + l.label(j);
      },
      jobs);
  r.merge(a);
  return r;
}

Report verify_z_grading(const LieAlgebra& l) {
  Report r;
  r.identity = "z_grading";
  if (!l.z_degree()) throw Error(Errc::GradingMissing, "algebra has no Z-grading");
  const auto& deg = *l.z_degree();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      ++r.cases;
      int target = deg[i] + deg[j];
      for (const auto& t : l.bracket_terms(i, j))
        if (deg[t.index] != target || target < -2 || target > 2) {
          r.fail(l.label(i) + "," + l.label(j));
          break;
        }
    }
  return r;
}

Subspace ideal_closure(const LieAlgebra& l, const std::vector<Vector>& generators) {
  std::size_t d = l.dim();
  EchelonBuilder eb(d);
  std::vector<Vector> queue;
  for (const auto& g : generators)
    if (eb.add(g)) queue.push_back(g);
  while (!queue.empty() && eb.size() < d) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t k = 0; k < d && eb.size() < d; ++k) {
      Vector w = l.bracket(v, l.basis(k));
      if (eb.add(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace(d, l.proto(), eb.rows());
}

bool is_simple(const LieAlgebra& l, int jobs) {
  std::size_t d = l.dim();
  if (d < 2) return false;
  std::atomic<bool> ok{true};
  parallel_for(
      d,
      [&](std::size_t i) {
        if (!ok.load()) return;
        if (ideal_closure(l, {l.basis(i)}).dim() != d) ok.store(false);
      },
      jobs);
  return ok.load();
}

KantorPair pair_from_graded(const LieAlgebra& l, int level) {
  if (!l.z_degree()) throw Error(Errc::GradingMissing, "algebra has no Z-grading");
  std::vector<std::size_t> comp[2] = {l.component(level), l.component(-level)};
  const Scalar& proto = l.proto();
  TripleTable tables[2];
  for (int s = 0; s < 2; ++s) {
    const auto& a = comp[s];
    const auto& b = comp[1 - s];
    std::vector<SparseVec> entries;
    entries.reserve(a.size() * b.size() * a.size());
    for (std::size_t i : a)
      for (std::size_t j : b) {
        Vector xy = l.bracket(l.basis(i), l.basis(j));
        for (std::size_t k : a) {
          Vector full = l.bracket(xy, l.basis(k));
          Vector restricted(a.size(), proto);
          for (std::size_t t = 0; t < a.size(); ++t) {
            restricted[t] = full[a[t]];
            full[a[t]] = proto;
          }
          if (!is_zero(full)) throw Error(Errc::InconsistentGrading, "triple product leaves its component");
          entries.push_back(sparse_of(restricted));
        }
      }
    tables[s] = TripleTable(a.size(), b.size(), std::move(entries), proto);
  }
  return KantorPair::from_tables(tables[0], tables[1], proto);
}

Report jordan_pair_iv_k_check(const LieAlgebra& l) {
  const KantorPair& p = l.pair();
  if (!p.carrier()) throw Error(Errc::PreconditionViolated, "needs the Kantor algebra of a Hurwitz algebra");
  const HurwitzAlgebra& c = *p.carrier();
  if (c.dim() < 2) throw Error(Errc::PreconditionViolated, "needs dim C > 1");
  if (!char_zero(l.proto()) || !c.field().has_sqrt_minus_one())
    throw Error(Errc::PreconditionViolated, "needs a characteristic zero field containing sqrt(-1)");
  const FieldDescriptor& f = c.field();
  std::size_t n = c.dim(), big = 2 * n;
  Report r;
  r.identity = "jordan_pair_iv_k";

  ++r.cases;
  if (!k_identically_zero(pair_from_graded(l, 2))) r.fail("K is not zero on (L2, L-2)");

  std::vector<Vector> skew = kernel(Matrix::identity(n, f.zero()) + c.involution_matrix());
  r.notes.push_back("k=" + std::to_string(skew.size()));
  std::vector<Vector> xs = skew;
  for (std::size_t a = 0; a < skew.size(); ++a)
    for (std::size_t b = a + 1; b < skew.size(); ++b) xs.push_back(add(skew[a], scale(f.sqrt_minus_one(), skew[b])));

  auto iota = [&](Sign s, const Matrix& m) {
    Matrix out(big, big, f.zero());
    if (s == Sign::Plus) add_block(out, n, 0, f.one(), m);
    else add_block(out, 0, n, f.one(), m);
    return out;
  };
  Scalar half = f.from_rational(1, 2);
  Scalar i = f.sqrt_minus_one();
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t b = 0; b < skew.size(); ++b) {
        const Vector& x = xs[a];
        const Vector& y = skew[b];
        Matrix lx = c.left_mult(x), ly = c.left_mult(y);
        ++r.cases;
        Matrix lhs = commutator(commutator(iota(s, lx), iota(opposite(s), ly)), iota(s, lx)).scaled(half);
        Vector xyx = sub(scale(c.norm(x), y), scale(c.polar(x, y), x));
        if (lhs != iota(s, c.left_mult(xyx)))
          r.fail(std::string("U identity ") + sign_name(s) + " x#" + std::to_string(a) + " y#" + std::to_string(b));
        ++r.cases;
        Matrix px = iota(s, lx).scaled(i), py = iota(opposite(s), ly).scaled(i);
        Matrix q = commutator(commutator(px, py), px).scaled(half);
        Vector qxy = sub(scale(c.polar(x, y), x), scale(c.norm(x), y));
        if (q != iota(s, c.left_mult(qxy)).scaled(i))
          r.fail(std::string("type IV map ") + sign_name(s) + " x#" + std::to_string(a) + " y#" + std::to_string(b));
      }
  return r;
}

Matrix extend_automorphism(const LieAlgebra& l, const Matrix& phi_minus, const Matrix& phi_plus) {
  const KantorPair& p = l.pair();
  if (!is_pair_automorphism(p, phi_minus, phi_plus))
    throw Error(Errc::NotAnAutomorphism, "map is not an automorphism of the Kantor pair");
  std::size_t nm = l.n_minus(), n = nm + l.n_plus();
  Matrix phi(n, n, l.proto());
  add_block(phi, 0, 0, l.proto().one_like(), phi_minus);
  add_block(phi, nm, nm, l.proto().one_like(), phi_plus);
  Matrix inv = inverse(phi);
  Matrix out(l.dim(), l.dim(), l.proto());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const Block& b = l.realization(i);
    out.set_column(i, l.coords_of({phi * b.m * inv, phi.apply(b.v)}));
  }
  return out;
}

bool is_lie_automorphism(const LieAlgebra& l, const Matrix& m) {
  std::size_t d = l.dim();
  if (m.rows() != d || m.cols() != d || rank(m) != d) return false;
  std::vector<Vector> img;
  for (std::size_t i = 0; i < d; ++i) img.push_back(m.column(i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector br = zero_vector(d, l.proto());
      for (const auto& t : l.bracket_terms(i, j)) br[t.index] = t.coeff;
      if (m.apply(br) != l.bracket(img[i], img[j])) return false;
    }
  return true;
}

Scalar killing_form(const LieAlgebra& l, const Vector& x, const Vector& y) {
  Matrix m = l.ad(x) * l.ad(y);
  Scalar t = l.proto();
  for (std::size_t i = 0; i < l.dim(); ++i) t += m(i, i);
  return t;
}

RootDatum cartan_subalgebra_and_roots(const LieAlgebra& l, const std::vector<DegreeKey>& degree) {
  std::size_t d = l.dim();
  if (degree.size() != d) throw Error(Errc::BadDimension, "one degree per basis vector expected");
  if (!char_zero(l.proto())) throw Error(Errc::PreconditionViolated, "root data need characteristic zero");
  RootDatum r;
  std::map<DegreeKey, std::vector<std::size_t>> spaces;
  for (std::size_t i = 0; i < d; ++i) {
    bool zero = true;
    for (long long c : degree[i]) zero = zero && c == 0;
    if (zero) r.cartan.push_back(i);
    else spaces[degree[i]].push_back(i);
  }
  std::size_t h = r.cartan.size();
  for (std::size_t a : r.cartan)
    for (std::size_t b : r.cartan)
      if (!l.bracket_terms(a, b).empty()) throw Error(Errc::NotDiagonalizable, "zero component is not abelian");
  const Scalar& proto = l.proto();
  for (const auto& [key, idx] : spaces) {
    Vector alpha(h, proto);
    for (std::size_t k = 0; k < h; ++k) {
      for (std::size_t n = 0; n < idx.size(); ++n) {
        const SparseVec& terms = l.bracket_terms(r.cartan[k], idx[n]);
        Scalar c = proto;
        for (const auto& t : terms) {
          if (t.index != idx[n]) throw Error(Errc::NotDiagonalizable, "component is not an ad H eigenspace");
          c = t.coeff;
        }
        if (n == 0) alpha[k] = c;
        else if (alpha[k] != c) throw Error(Errc::NotDiagonalizable, "component mixes eigenvalues");
      }
    }
    if (is_zero(alpha)) throw Error(Errc::NotDiagonalizable, "nonzero degree with zero root");
    r.roots.push_back(alpha);
    r.root_spaces.push_back(idx);
  }
  r.killing_h = Matrix(h, h, proto);
  for (std::size_t a = 0; a < r.roots.size(); ++a) {
    Scalar mult = proto.from_int_like(static_cast<long long>(r.root_spaces[a].size()));
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) r.killing_h(i, j) += mult * r.roots[a][i] * r.roots[a][j];
  }
  r.rank_of_roots = r.roots.empty() ? 0 : rank(Matrix::from_rows(r.roots));
  if (h > 0 && rank(r.killing_h) == h) r.killing_h_inverse = inverse(r.killing_h);
  return r;
}

Scalar root_pairing(const RootDatum& r, const Vector& a, const Vector& b) {
  if (r.killing_h_inverse.rows() == 0) throw Error(Errc::DivisionByZero, "Killing form on H is degenerate");
  return dot(a, r.killing_h_inverse.apply(b));
}

}  // namespace kantorlab
