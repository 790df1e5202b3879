#include "hopfclass/module.hpp"

#include <deque>
#include <stdexcept>

namespace hopfclass {

namespace {

Mat word_matrix(const Module& m, const Word& w) {
  Mat out = Mat::identity(m.algebra().field(), m.dim());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = m.action(*it) * out;
  return out;
}

const WeightLattice& require_weights(const Algebra& h) {
  const WeightLattice* w = h.weights();
  if (!w) throw std::logic_error("algebra " + h.presentation().name + " has no weight grading");
  return *w;
}

void require_weight_module(const Module& m, const char* where) {
  if (!m.has_weights()) throw std::invalid_argument(std::string(where) + ": module is not in a weight basis");
}

}  // namespace

// ---------------------------------------------------------------------------
// Module

Module::Module(const Algebra& h, std::vector<Mat> actions, std::string label)
    : algebra_(&h), actions_(std::move(actions)), label_(std::move(label)) {
  if (actions_.size() != static_cast<std::size_t>(h.num_generators()))
    throw std::invalid_argument("Module: need one matrix per generator");
  dim_ = actions_.front().rows();
  for (const auto& a : actions_)
    if (a.rows() != dim_ || a.cols() != dim_) throw std::invalid_argument("Module: matrices must be square of equal size");
  detect_weights();
  check_relations();
}

Module Module::zero(const Algebra& h) {
  return Module(h, std::vector<Mat>(static_cast<std::size_t>(h.num_generators()), Mat(0, 0)), "0");
}

const WeightLattice& Module::lattice() const { return require_weights(*algebra_); }

std::vector<std::size_t> Module::character() const {
  require_weight_module(*this, "character");
  std::vector<std::size_t> c(static_cast<std::size_t>(lattice().count()));
  for (std::size_t w = 0; w < c.size(); ++w) c[w] = blocks_.empty() ? 0 : blocks_[w].size();
  return c;
}

void Module::detect_weights() {
  const WeightLattice* lat = algebra_->weights();
  if (!lat) return;
  const auto& field = algebra_->field();
  std::vector<std::vector<int>> exps(dim_, std::vector<int>(static_cast<std::size_t>(lat->rank())));
  for (int k = 0; k < lat->rank(); ++k) {
    const Mat& g = action(lat->grouplike()[static_cast<std::size_t>(k)]);
    if (!g.is_diagonal()) return;
    for (std::size_t i = 0; i < dim_; ++i) {
      const int e = field.q_log(g(i, i));
      if (e < 0) return;
      exps[i][static_cast<std::size_t>(k)] = e;
    }
  }
  weight_.resize(dim_);
  blocks_.assign(static_cast<std::size_t>(lat->count()), {});
  for (std::size_t i = 0; i < dim_; ++i) {
    weight_[i] = lat->encode(exps[i]);
    blocks_[static_cast<std::size_t>(weight_[i])].push_back(i);
  }
  std::vector<std::size_t> pos(dim_);
  for (const auto& b : blocks_)
    for (std::size_t k = 0; k < b.size(); ++k) pos[b[k]] = k;
  const int m = algebra_->num_generators();
  gen_blocks_.assign(static_cast<std::size_t>(m), {});
  for (int g = 0; g < m; ++g) {
    const Mat& a = action(g);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if (!a(r, c).is_zero() && weight_[r] != lat->act(g, weight_[c]))
          throw std::logic_error("Module: generator " + algebra_->presentation().gens[static_cast<std::size_t>(g)].name +
                                 " does not respect weights");
    auto& gb = gen_blocks_[static_cast<std::size_t>(g)];
    for (int w = 0; w < lat->count(); ++w) {
      const auto& src = blocks_[static_cast<std::size_t>(w)];
      const auto& dst = blocks_[static_cast<std::size_t>(lat->act(g, w))];
      Mat blk(dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c)
        for (std::size_t r = 0; r < dst.size(); ++r) blk(r, c) = a(dst[r], src[c]);
      gb.push_back(std::move(blk));
    }
  }
}

void Module::check_relations() const {
  const auto& pres = algebra_->presentation();
  const auto rels = pres.relations();
  const auto& field = algebra_->field();
  auto fail = [&](std::size_t k) {
    std::string s;
    for (const auto& t : rels[k]) {
      s += " + (" + t.coeff.to_string() + ")";
      for (int g : t.word) s += pres.gens[static_cast<std::size_t>(g)].name;
    }
    throw std::logic_error("Module " + label_ + ": relation fails:" + s);
  };
  if (dim_ == 0) return;
  if (!has_weights()) {
    for (std::size_t k = 0; k < rels.size(); ++k) {
      Mat acc(dim_, dim_);
      for (const auto& t : rels[k]) {
        Mat w = word_matrix(*this, t.word);
        w *= t.coeff;
        acc = acc + w;
      }
      if (!acc.is_zero()) fail(k);
    }
    return;
  }
  const WeightLattice& lat = lattice();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    for (int w = 0; w < lat.count(); ++w) {
      if (block_dim(w) == 0) continue;
      std::map<int, Mat> acc;
      for (const auto& t : rels[k]) {
        Mat cur = Mat::identity(field, block_dim(w));
        int cw = w;
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
          cur = block_action(*it, cw) * cur;
          cw = lat.act(*it, cw);
        }
        cur *= t.coeff;
        auto [pos, inserted] = acc.try_emplace(cw, cur);
        if (!inserted) pos->second = pos->second + cur;
      }
      for (const auto& [tw, m] : acc)
        if (!m.is_zero()) fail(k);
    }
  }
}

// ---------------------------------------------------------------------------
// Weights

std::map<int, Subspace> weight_decomposition(const Module& m) {
  const WeightLattice& lat = require_weights(m.algebra());
  const auto& field = m.algebra().field();
  std::map<int, Subspace> out;
  if (m.has_weights()) {
    for (int w = 0; w < lat.count(); ++w) {
      if (m.block_dim(w) == 0) continue;
      std::vector<Vec> vs;
      for (std::size_t i : m.block(w)) {
        Vec v(m.dim());
        v[i] = field.one();
        vs.push_back(std::move(v));
      }
      out.emplace(w, Subspace::span(m.dim(), std::move(vs)));
    }
    return out;
  }
  // Refine one group-like at a time: eigenspaces of each restricted action.
  std::vector<std::pair<std::vector<int>, Subspace>> parts;
  parts.emplace_back(std::vector<int>{}, Subspace::full(field, m.dim()));
  for (int k = 0; k < lat.rank(); ++k) {
    const Mat& g = m.action(lat.grouplike()[static_cast<std::size_t>(k)]);
    std::vector<std::pair<std::vector<int>, Subspace>> next;
    for (auto& [exps, space] : parts) {
      const Mat t = restrict_operator(g, space);
      for (int e = 0; e < lat.n(); ++e) {
        Mat shifted = t;
        for (std::size_t i = 0; i < t.rows(); ++i) shifted(i, i) -= field.q_pow(e);
        const Subspace ker = kernel_basis(shifted, &field);
        if (ker.dim() == 0) continue;
        std::vector<Vec> vs;
        for (const auto& c : ker.basis()) {
          Vec v(m.dim());
          for (std::size_t j = 0; j < c.size(); ++j)
            if (!c[j].is_zero()) axpy(v, c[j], space.basis()[j]);
          vs.push_back(std::move(v));
        }
        auto e2 = exps;
        e2.push_back(e);
        next.emplace_back(std::move(e2), Subspace::span(m.dim(), std::move(vs)));
      }
    }
    parts = std::move(next);
  }
  for (auto& [exps, space] : parts) out.emplace(lat.encode(exps), std::move(space));
  return out;
}

Module weight_normalize(const Module& m) {
  if (m.has_weights()) return m;
  const WeightLattice& lat = require_weights(m.algebra());
  const auto spaces = weight_decomposition(m);
  std::size_t total = 0;
  for (const auto& [w, s] : spaces) total += s.dim();
  if (total != m.dim())
    throw std::logic_error("weight_normalize: weight spaces span " + std::to_string(total) + " of " +
                           std::to_string(m.dim()) + " dimensions");
  const auto& field = m.algebra().field();
  // New basis: weight spaces in increasing weight order.
  std::vector<std::pair<int, std::size_t>> where(m.dim());  // (weight, index within space)
  std::map<int, std::size_t> offset;
  std::size_t pos = 0;
  for (const auto& [w, s] : spaces) {
    offset[w] = pos;
    pos += s.dim();
  }
  std::vector<Mat> acts;
  for (int g = 0; g < m.algebra().num_generators(); ++g) {
    Mat a(m.dim(), m.dim());
    for (const auto& [w, s] : spaces) {
      const int t = lat.act(g, w);
      auto it = spaces.find(t);
      for (std::size_t k = 0; k < s.dim(); ++k) {
        const Vec img = m.action(g).apply(s.basis()[k]);
        if (is_zero(img)) continue;
        if (it == spaces.end()) throw std::logic_error("weight_normalize: generator leaves the weight spaces");
        auto coords = it->second.coordinates(img);
        if (!coords) throw std::logic_error("weight_normalize: generator does not shift weights as expected");
        for (std::size_t r = 0; r < coords->size(); ++r) a(offset[t] + r, offset[w] + k) = (*coords)[r];
      }
    }
    acts.push_back(std::move(a));
  }
  (void)field;
  return Module(m.algebra(), std::move(acts), m.label());
}

// ---------------------------------------------------------------------------
// Constructions

Module tensor_module(const Module& m, const Module& n) {
  if (&m.algebra() != &n.algebra()) throw std::invalid_argument("tensor_module: modules over different algebras");
  const Algebra& h = m.algebra();
  if (m.dim() == 0 || n.dim() == 0) return Module::zero(h);
  std::vector<Mat> acts;
  for (int g = 0; g < h.num_generators(); ++g) {
    Mat acc(m.dim() * n.dim(), m.dim() * n.dim());
    for (const auto& t : h.presentation().coproduct[static_cast<std::size_t>(g)]) {
      Mat k = kronecker(word_matrix(m, t.left), word_matrix(n, t.right));
      if (!t.coeff.is_one()) k *= t.coeff;
      acc = acc + k;
    }
    acts.push_back(std::move(acc));
  }
  return Module(h, std::move(acts), m.label() + "(x)" + n.label());
}

Module direct_sum(const Module& m, const Module& n) {
  if (&m.algebra() != &n.algebra()) throw std::invalid_argument("direct_sum: modules over different algebras");
  std::vector<Mat> acts;
  for (int g = 0; g < m.algebra().num_generators(); ++g) acts.push_back(direct_sum(m.action(g), n.action(g)));
  return Module(m.algebra(), std::move(acts), m.label() + "+" + n.label());
}

Module conjugate(const Module& m, const Mat& p, const Mat& p_inverse) {
  std::vector<Mat> acts;
  for (const auto& a : m.actions()) acts.push_back(p_inverse * a * p);
  return Module(m.algebra(), std::move(acts), m.label());
}

// ---------------------------------------------------------------------------
// Graded subspaces

std::size_t GradedSubspace::dim() const {
  std::size_t d = 0;
  for (const auto& p : parts) d += p.dim();
  return d;
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  for (std::size_t w = 0; w < parts.size(); ++w)
    if (!parts[w].contains(other.parts[w])) return false;
  return true;
}

GradedSubspace zero_subspace(const Module& m) {
  require_weight_module(m, "zero_subspace");
  GradedSubspace u;
  for (int w = 0; w < m.lattice().count(); ++w) u.parts.emplace_back(m.block_dim(w));
  return u;
}

GradedSubspace full_subspace(const Module& m) {
  require_weight_module(m, "full_subspace");
  GradedSubspace u;
  for (int w = 0; w < m.lattice().count(); ++w) u.parts.push_back(Subspace::full(m.algebra().field(), m.block_dim(w)));
  return u;
}

GradedSubspace spin(const Module& m, GradedSubspace u) {
  require_weight_module(m, "spin");
  const WeightLattice& lat = m.lattice();
  std::deque<std::pair<int, Vec>> queue;
  for (int w = 0; w < lat.count(); ++w)
    for (const auto& v : u.parts[static_cast<std::size_t>(w)].basis()) queue.emplace_back(w, v);
  while (!queue.empty()) {
    auto [w, v] = std::move(queue.front());
    queue.pop_front();
    for (int g = 0; g < m.algebra().num_generators(); ++g) {
      if (lat.grouplike_position(g) >= 0) continue;
      const int t = lat.act(g, w);
      Vec x = m.block_action(g, w).apply(v);
      if (is_zero(x)) continue;
      if (u.parts[static_cast<std::size_t>(t)].insert(x)) queue.emplace_back(t, std::move(x));
    }
  }
  return u;
}

Module submodule(const Module& m, const GradedSubspace& u) {
  return subquotient(m, u, zero_subspace(m));
}

std::vector<Subspace> subquotient_lifts(const Module& m, const GradedSubspace& u, const GradedSubspace& v) {
  require_weight_module(m, "subquotient");
  const auto count = static_cast<std::size_t>(m.lattice().count());
  // Complement of V_w in U_w made of vectors vanishing on V_w's pivots.
  std::vector<Subspace> reps(count);
  for (std::size_t w = 0; w < count; ++w) {
    std::vector<Vec> red;
    for (const auto& b : u.parts[w].basis()) {
      Vec r = v.parts[w].reduce(b);
      if (!is_zero(r)) red.push_back(std::move(r));
    }
    reps[w] = Subspace::span(m.block_dim(static_cast<int>(w)), std::move(red));
    if (reps[w].dim() + v.parts[w].dim() != u.parts[w].dim())
      throw std::invalid_argument("subquotient: V is not contained in U");
  }
  return reps;
}

Module subquotient(const Module& m, const GradedSubspace& u, const GradedSubspace& v) {
  const WeightLattice& lat = m.lattice();
  const auto count = static_cast<std::size_t>(lat.count());
  const std::vector<Subspace> reps = subquotient_lifts(m, u, v);
  std::vector<std::size_t> offset(count);
  std::size_t total = 0;
  for (std::size_t w = 0; w < count; ++w) {
    offset[w] = total;
    total += reps[w].dim();
  }
  std::vector<Mat> acts;
  for (int g = 0; g < m.algebra().num_generators(); ++g) {
    Mat a(total, total);
    for (std::size_t w = 0; w < count; ++w) {
      const auto t = static_cast<std::size_t>(lat.act(g, static_cast<int>(w)));
      for (std::size_t k = 0; k < reps[w].dim(); ++k) {
        Vec x = v.parts[t].reduce(m.block_action(g, static_cast<int>(w)).apply(reps[w].basis()[k]));
        if (is_zero(x)) continue;
        auto c = reps[t].coordinates(x);
        if (!c) throw std::logic_error("subquotient: U is not a submodule");
        for (std::size_t r = 0; r < c->size(); ++r) a(offset[t] + r, offset[w] + k) = (*c)[r];
      }
    }
    acts.push_back(std::move(a));
  }
  return Module(m.algebra(), std::move(acts), m.label());
}

GradedSubspace graded_span(const Module& m, const std::vector<Vec>& vectors) {
  GradedSubspace u = zero_subspace(m);
  for (const auto& v : vectors) {
    // Split v into weight components so any vector is accepted.
    for (int w = 0; w < m.lattice().count(); ++w) {
      const auto& idx = m.block(w);
      if (idx.empty()) continue;
      Vec local(idx.size());
      bool nz = false;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        local[k] = v[idx[k]];
        nz = nz || !local[k].is_zero();
      }
      if (nz) u.parts[static_cast<std::size_t>(w)].insert(std::move(local));
    }
  }
  return u;
}

Subspace to_full(const Module& m, const GradedSubspace& u) {
  std::vector<Vec> vs;
  for (int w = 0; w < m.lattice().count(); ++w) {
    const auto& idx = m.block(w);
    for (const auto& b : u.parts[static_cast<std::size_t>(w)].basis()) {
      Vec v(m.dim());
      for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = b[k];
      vs.push_back(std::move(v));
    }
  }
  return Subspace::span(m.dim(), std::move(vs));
}

GradedOp element_op(const Module& m, const AlgElt& x) {
  require_weight_module(m, "element_op");
  const Algebra& h = m.algebra();
  const WeightLattice& lat = m.lattice();
  const auto deg = h.degree(x);
  if (!deg) throw std::invalid_argument("element_op: element is not homogeneous");
  GradedOp op;
  op.degree = *deg;
  for (int w = 0; w < lat.count(); ++w) {
    const int t = lat.add(w, op.degree);
    Mat acc(m.block_dim(t), m.block_dim(w));
    if (m.block_dim(w) > 0 && m.block_dim(t) > 0) {
      for (const auto& [u, c] : x.terms()) {
        const auto e = h.exponents(u);
        Mat cur = Mat::identity(h.field(), m.block_dim(w));
        int cw = w;
        for (int g = h.num_generators() - 1; g >= 0 && cur.cols() > 0; --g)
          for (int k = 0; k < e[static_cast<std::size_t>(g)]; ++k) {
            cur = m.block_action(g, cw) * cur;
            cw = lat.act(g, cw);
          }
        cur *= c;
        acc = acc + cur;
      }
    }
    op.blocks.push_back(std::move(acc));
  }
  return op;
}

GradedSubspace apply_ops(const Module& m, const std::vector<GradedOp>& ops, const GradedSubspace& u) {
  GradedSubspace out = zero_subspace(m);
  const WeightLattice& lat = m.lattice();
  for (const auto& op : ops)
    for (int w = 0; w < lat.count(); ++w) {
      const auto t = static_cast<std::size_t>(lat.add(w, op.degree));
      for (const auto& v : u.parts[static_cast<std::size_t>(w)].basis()) {
        Vec x = op.blocks[static_cast<std::size_t>(w)].apply(v);
        if (!is_zero(x)) out.parts[t].insert(std::move(x));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Hom

std::vector<Mat> hom_basis(const Module& m, const Module& n) {
  require_weight_module(m, "hom_basis");
  require_weight_module(n, "hom_basis");
  if (&m.algebra() != &n.algebra()) throw std::invalid_argument("hom_basis: modules over different algebras");
  if (m.dim() == 0 || n.dim() == 0) return {};
  const Algebra& h = m.algebra();
  const WeightLattice& lat = m.lattice();
  const auto count = static_cast<std::size_t>(lat.count());
  // f = sum over weights of f_w : M_w -> N_w, stored row-major.
  std::vector<std::size_t> off(count + 1, 0);
  for (std::size_t w = 0; w < count; ++w)
    off[w + 1] = off[w] + n.block_dim(static_cast<int>(w)) * m.block_dim(static_cast<int>(w));
  const std::size_t vars = off[count];
  if (vars == 0) return {};
  auto var = [&](std::size_t w, std::size_t r, std::size_t c) {
    return off[w] + r * m.block_dim(static_cast<int>(w)) + c;
  };
  std::vector<Vec> rows;
  for (int g = 0; g < h.num_generators(); ++g) {
    if (lat.grouplike_position(g) >= 0) continue;
    for (std::size_t w = 0; w < count; ++w) {
      const auto t = static_cast<std::size_t>(lat.act(g, static_cast<int>(w)));
      const std::size_t mw = m.block_dim(static_cast<int>(w)), mt = m.block_dim(static_cast<int>(t));
      const std::size_t nw = n.block_dim(static_cast<int>(w)), nt = n.block_dim(static_cast<int>(t));
      if (mw == 0 || nt == 0) continue;
      const Mat& xm = m.block_action(g, static_cast<int>(w));  // mt x mw
      const Mat& xn = n.block_action(g, static_cast<int>(w));  // nt x nw
      // (f_t X^M - X^N f_w)[r][c] = 0
      for (std::size_t r = 0; r < nt; ++r)
        for (std::size_t c = 0; c < mw; ++c) {
          Vec row(vars);
          bool nz = false;
          for (std::size_t k = 0; k < mt; ++k)
            if (!xm(k, c).is_zero()) {
              row[var(t, r, k)] += xm(k, c);
              nz = true;
            }
          for (std::size_t k = 0; k < nw; ++k)
            if (!xn(r, k).is_zero()) {
              row[var(w, k, c)] -= xn(r, k);
              nz = true;
            }
          if (nz) rows.push_back(std::move(row));
        }
    }
  }
  const Subspace ker = kernel_basis(Mat::from_rows(vars, rows), &h.field());
  std::vector<Mat> out;
  for (const auto& v : ker.basis()) {
    Mat f(n.dim(), m.dim());
    for (std::size_t w = 0; w < count; ++w) {
      const auto& ri = n.block(static_cast<int>(w));
      const auto& ci = m.block(static_cast<int>(w));
      for (std::size_t r = 0; r < ri.size(); ++r)
        for (std::size_t c = 0; c < ci.size(); ++c) f(ri[r], ci[c]) = v[var(w, r, c)];
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) {
  if (m.dim() == 0 || n.dim() == 0) return 0;
  return hom_basis(weight_normalize(m), weight_normalize(n)).size();
}

}  // namespace hopfclass
