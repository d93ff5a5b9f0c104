#include "qwb/engine.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qwb {

// --------------------------------------------------------------- Generators

int Generators::g(int i) const {
  if (i < 1 || i >= r) throw EngineError("g_" + std::to_string(i) + " out of range for r = " + std::to_string(r));
  return i;
}

int Generators::gs(int j) const {
  if (j < 1 || j >= s) throw EngineError("g*_" + std::to_string(j) + " out of range for s = " + std::to_string(s));
  return r - 1 + j;
}

std::string Generators::name(int gen) const {
  if (gen == 0) return "e1";
  if (is_g(gen)) return "g" + std::to_string(gen);
  return "g*" + std::to_string(index(gen));
}

Word parse_word(const Generators& gens, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool inverse = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inverse = true;
      tok.resize(tok.size() - 3);
    }
    auto number = [&](std::size_t from) {
      if (from >= tok.size() || !std::all_of(tok.begin() + from, tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw EngineError("bad letter '" + tok + "'");
      return std::stoi(tok.substr(from));
    };
    if (tok == "e1") {
      if (inverse) throw EngineError("e1 is not invertible");
      w.push_back({gens.e(), false});
    } else if (tok.rfind("g*", 0) == 0) {
      w.push_back({gens.gs(number(2)), inverse});
    } else if (tok.rfind("g", 0) == 0) {
      w.push_back({gens.g(number(1)), inverse});
    } else {
      throw EngineError("bad letter '" + tok + "'");
    }
  }
  return w;
}

std::string word_to_string(const Generators& gens, const Word& w) {
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += " ";
    out += gens.name(t.gen) + (t.inverse ? "^-1" : "");
  }
  return out;
}

// ---------------------------------------------------------------- relations

std::vector<Relation> defining_relations(const Generators& gens, const Field& F) {
  require_q_invertible(F);
  const Scalar one = F.one(), mone = F.from_int(-1);
  const Scalar qq = F.sub(F.q(), q_power(F, -1));
  const Scalar rho = F.rho();
  const Scalar del = delta(F);
  std::vector<Relation> out;
  auto tag = [](const std::string& letter, const std::string& detail) { return letter + "[" + detail + "]"; };
  auto W = [](std::initializer_list<Token> ts) { return Word(ts); };
  const int r = gens.r, s = gens.s;
  const Token e{gens.e(), false};

  // One Hecke side: quadratic, far commutation, braid.
  auto hecke = [&](int n, auto gen, const std::string& quad, const std::string& far, const std::string& braid) {
    for (int i = 1; i < n; ++i) {
      Token g{gen(i), false};
      out.push_back({tag(quad, "i=" + std::to_string(i)), {{one, W({g, g})}, {F.neg(qq), W({g})}, {mone, W({})}}});
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        Token a{gen(i), false}, b{gen(j), false};
        out.push_back({tag(far, std::to_string(i) + "," + std::to_string(j)), {{one, W({a, b})}, {mone, W({b, a})}}});
      }
    for (int i = 1; i + 1 < n; ++i) {
      Token a{gen(i), false}, b{gen(i + 1), false};
      out.push_back({tag(braid, "i=" + std::to_string(i)), {{one, W({a, b, a})}, {mone, W({b, a, b})}}});
    }
  };
  hecke(r, [&](int i) { return gens.g(i); }, "a", "b", "c");
  for (int i = 2; i < r; ++i) {
    Token g{gens.g(i), false};
    out.push_back({tag("d", "i=" + std::to_string(i)), {{one, W({g, e})}, {mone, W({e, g})}}});
  }
  if (r >= 2) {
    Token g{gens.g(1), false};
    out.push_back({"e", {{one, W({e, g, e})}, {F.neg(rho), W({e})}}});
  }
  out.push_back({"f", {{one, W({e, e})}, {F.neg(del), W({e})}}});
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < s; ++j) {
      Token a{gens.g(i), false}, b{gens.gs(j), false};
      out.push_back({tag("g", std::to_string(i) + "," + std::to_string(j)), {{one, W({a, b})}, {mone, W({b, a})}}});
    }
  hecke(s, [&](int j) { return gens.gs(j); }, "h", "i", "j");
  for (int j = 2; j < s; ++j) {
    Token g{gens.gs(j), false};
    out.push_back({tag("k", "i=" + std::to_string(j)), {{one, W({g, e})}, {mone, W({e, g})}}});
  }
  if (s >= 2) {
    Token g{gens.gs(1), false};
    out.push_back({"l", {{one, W({e, g, e})}, {F.neg(rho), W({e})}}});
  }
  if (r >= 2 && s >= 2) {
    Token g{gens.g(1), false}, gi{gens.g(1), true}, h{gens.gs(1), false};
    out.push_back({"m", {{one, W({e, gi, h, e, g})}, {mone, W({e, gi, h, e, h})}}});
    out.push_back({"n", {{one, W({g, e, gi, h, e})}, {mone, W({h, e, gi, h, e})}}});
  }
  return out;
}

// --------------------------------------------------------------- Enumerator

// Linear vector enumeration of the right regular module: vectors are
// defined as (parent vector) * letter, every relation is pushed through
// every live vector, and each resulting linear dependency kills its
// highest-numbered vector, which is then rewritten in terms of lower ones.
class Enumerator {
 public:
  Enumerator(const Field& F, const Generators& gens, std::size_t limit)
      : F_(F), gens_(gens), limit_(limit), acc_apply_(F, 64), acc_norm_(F, 64) {
    qq_ = F.sub(F.q(), q_power(F, -1));
    relations_ = defining_relations(gens, F);
    new_vector(-1, -1);
  }

  void run() {
    for (std::size_t k = 0; k < vecs_.size(); ++k) {
      if (!vecs_[k].alive) continue;
      for (int gen = 0; gen < gens_.count(); ++gen) image(static_cast<int>(k), gen);
      for (const auto& rel : relations_) {
        if (!vecs_[k].alive) break;
        push(static_cast<int>(k), rel);
      }
    }
  }

  struct Vec {
    int parent = -1;
    int letter = -1;
    bool alive = true;
    SparseVec repl;
    std::vector<SparseVec> img;
    std::vector<char> has_img;
  };

  std::vector<Vec>& vecs() { return vecs_; }
  SparseVec normalize(const SparseVec& v) {
    bool clean = true;
    for (const auto& [k, c] : v)
      if (!vecs_[k].alive) {
        resolve(k);
        clean = false;
      }
    if (clean) return v;
    for (const auto& [k, c] : v) {
      if (vecs_[k].alive)
        acc_norm_.add(k, c);
      else
        acc_norm_.add_scaled(vecs_[k].repl, c);
    }
    return acc_norm_.take();
  }
  SparseVec image(int k, int gen) {
    Vec& v = vecs_[k];
    if (!v.has_img[gen]) {
      int n = new_vector(k, gen);
      Vec& vv = vecs_[k];  // new_vector may reallocate
      vv.img[gen] = sparse_unit(F_, n);
      vv.has_img[gen] = 1;
      return vv.img[gen];
    }
    SparseVec norm = normalize(v.img[gen]);
    vecs_[k].img[gen] = norm;
    return norm;
  }

 private:
  int new_vector(int parent, int letter) {
    if (vecs_.size() >= limit_)
      throw IntegrityError("enumeration exceeded " + std::to_string(limit_) + " vectors without closing");
    Vec v;
    v.parent = parent;
    v.letter = letter;
    v.img.resize(gens_.count());
    v.has_img.assign(gens_.count(), 0);
    vecs_.push_back(std::move(v));
    return static_cast<int>(vecs_.size()) - 1;
  }

  // Makes the replacement of a dead vector refer to live vectors only.
  void resolve(int k) {
    SparseVec& repl = vecs_[k].repl;
    bool clean = true;
    for (const auto& [j, c] : repl)
      if (!vecs_[j].alive) {
        resolve(j);
        clean = false;
      }
    if (clean) return;
    const SparseVec& cur = vecs_[k].repl;
    for (const auto& [j, c] : cur) {
      if (vecs_[j].alive)
        acc_norm_.add(j, c);
      else
        acc_norm_.add_scaled(vecs_[j].repl, c);
    }
    vecs_[k].repl = acc_norm_.take();
  }

  // v must be normalized; returns v * t, normalized.
  SparseVec apply(const SparseVec& v, const Token& t) {
    std::vector<SparseVec> imgs;
    imgs.reserve(v.size());
    for (const auto& [k, c] : v) imgs.push_back(image(k, t.gen));
    for (std::size_t a = 0; a < v.size(); ++a) acc_apply_.add_scaled(imgs[a], v[a].second);
    if (t.inverse) acc_apply_.add_scaled(v, F_.neg(qq_));
    return acc_apply_.take();
  }

  void push(int k, const Relation& rel) {
    SparseVec total;
    for (const auto& [c, w] : rel.terms) {
      SparseVec v = sparse_unit(F_, k);
      for (const auto& t : w) {
        v = apply(v, t);
        if (v.empty()) break;
      }
      total = sparse_axpy(F_, normalize(total), c, normalize(v));
    }
    total = normalize(total);
    if (!total.empty()) coincide(std::move(total));
  }

  void coincide(SparseVec first) {
    std::vector<SparseVec> queue{std::move(first)};
    while (!queue.empty()) {
      SparseVec v = normalize(queue.back());
      queue.pop_back();
      if (v.empty()) continue;
      const int m = v.back().first;
      Scalar minv = F_.neg(F_.inv(v.back().second));
      v.pop_back();
      Vec& dead = vecs_[m];
      dead.alive = false;
      dead.repl = sparse_scale(F_, v, minv);
      std::vector<SparseVec> old_img;
      std::vector<int> old_gen;
      for (int gen = 0; gen < gens_.count(); ++gen)
        if (dead.has_img[gen]) {
          old_img.push_back(std::move(dead.img[gen]));
          old_gen.push_back(gen);
        }
      dead.img.clear();
      dead.img.shrink_to_fit();
      dead.has_img.assign(gens_.count(), 0);
      SparseVec repl = vecs_[m].repl;
      if (repl.empty() && m == 0) throw IntegrityError("the identity collapsed to zero");
      for (std::size_t a = 0; a < old_gen.size(); ++a) {
        SparseVec lhs = apply(normalize(repl), {old_gen[a], false});
        queue.push_back(sparse_sub(F_, lhs, normalize(old_img[a])));
      }
    }
  }

  const Field& F_;
  Generators gens_;
  std::size_t limit_;
  Scalar qq_;
  std::vector<Relation> relations_;
  std::vector<Vec> vecs_;
  SparseAccumulator acc_apply_;
  SparseAccumulator acc_norm_;
};

// ------------------------------------------------------------ AlgebraEngine

namespace {

int default_bound(const Field& F) { return F.kind() == FieldKind::Generic ? 5 : 7; }

}  // namespace

EnginePtr AlgebraEngine::build(int r, int s, const FieldPtr& field, EngineOptions opts) {
  if (r < 1 || s < 1) throw EngineError("r and s must be positive");
  const int bound = opts.max_size > 0 ? opts.max_size : default_bound(*field);
  if (r + s > bound)
    throw EngineError("r + s = " + std::to_string(r + s) + " exceeds the bound " + std::to_string(bound) +
                      " for field " + field->spec());
  require_q_invertible(*field);
  const Field& F = *field;
  Generators gens{r, s};
  std::size_t expected = 1;
  for (int k = 2; k <= r + s; ++k) expected *= static_cast<std::size_t>(k);

  Enumerator en(F, gens, expected * 400 + 10000);
  en.run();
  auto& vecs = en.vecs();

  std::shared_ptr<AlgebraEngine> eng(new AlgebraEngine());
  eng->field_ = field;
  eng->gens_ = gens;
  eng->defined_ = vecs.size();
  eng->qq_ = F.sub(F.q(), q_power(F, -1));
  eng->rho_ = F.rho();
  eng->delta_ = qwb::delta(F);

  std::vector<int> basis_of(vecs.size(), -1);
  int n = 0;
  for (std::size_t k = 0; k < vecs.size(); ++k)
    if (vecs[k].alive) basis_of[k] = n++;
  if (static_cast<std::size_t>(n) != expected)
    throw IntegrityError("enumeration closed at dimension " + std::to_string(n) + ", expected " +
                         std::to_string(expected));

  // Prefix forest: every ancestor of a live vector.
  std::vector<char> needed(vecs.size(), 0);
  for (std::size_t k = 0; k < vecs.size(); ++k)
    if (vecs[k].alive)
      for (int a = static_cast<int>(k); a >= 0 && !needed[a]; a = vecs[a].parent) needed[a] = 1;
  std::vector<int> node_of(vecs.size(), -1);
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    if (!needed[k]) continue;
    node_of[k] = static_cast<int>(eng->node_parent_.size());
    eng->node_parent_.push_back(vecs[k].parent < 0 ? -1 : node_of[vecs[k].parent]);
    eng->node_letter_.push_back(vecs[k].letter);
    eng->node_basis_.push_back(basis_of[k]);
  }
  eng->words_.resize(n);
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    if (!vecs[k].alive) continue;
    std::vector<int> w;
    for (int a = static_cast<int>(k); vecs[a].parent >= 0; a = vecs[a].parent) w.push_back(vecs[a].letter);
    std::reverse(w.begin(), w.end());
    eng->words_[basis_of[k]] = std::move(w);
  }

  eng->right_.assign(gens.count(), std::vector<SparseVec>(n));
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    if (!vecs[k].alive) continue;
    for (int gen = 0; gen < gens.count(); ++gen) {
      SparseVec img = en.image(static_cast<int>(k), gen);
      SparseVec row;
      for (auto& [j, c] : img) {
        if (basis_of[j] < 0) throw IntegrityError("image refers to a vector defined after closure");
        row.emplace_back(basis_of[j], std::move(c));
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      eng->right_[gen][basis_of[k]] = std::move(row);
    }
  }
  if (vecs.size() > eng->defined_) throw IntegrityError("vectors defined while reading the closed table");
  eng->finish();
  return eng;
}

void AlgebraEngine::finish() {
  const Field& F = *field_;
  const int n = dim();
  const int nodes = static_cast<int>(node_parent_.size());
  // Left multiplication by gen: propagate gen * prefix along the forest.
  left_.assign(gens_.count(), std::vector<SparseVec>(n));
  for (int gen = 0; gen < gens_.count(); ++gen) {
    std::vector<SparseVec> at(nodes);
    for (int k = 0; k < nodes; ++k) {
      at[k] = node_parent_[k] < 0 ? right_[gen][0] : apply_right(at[node_parent_[k]], {node_letter_[k], false});
      if (node_basis_[k] >= 0) left_[gen][node_basis_[k]] = at[k];
    }
  }
  // sigma(x_1 ... x_k) = x_k ... x_1: left-multiply along the forest.
  sigma_.assign(n, {});
  std::vector<SparseVec> at(nodes);
  for (int k = 0; k < nodes; ++k) {
    at[k] = node_parent_[k] < 0 ? sparse_unit(F, 0) : apply_left({node_letter_[k], false}, at[node_parent_[k]]);
    if (node_basis_[k] >= 0) sigma_[node_basis_[k]] = at[k];
  }
}

SparseVec AlgebraEngine::apply_right(const SparseVec& v, const Token& t) const {
  const Field& F = *field_;
  SparseAccumulator acc(F, dim());
  for (const auto& [k, c] : v) acc.add_scaled(right_[t.gen][k], c);
  if (t.inverse) acc.add_scaled(v, F.neg(qq_));
  return acc.take();
}

SparseVec AlgebraEngine::apply_left(const Token& t, const SparseVec& v) const {
  const Field& F = *field_;
  SparseAccumulator acc(F, dim());
  for (const auto& [k, c] : v) acc.add_scaled(left_[t.gen][k], c);
  if (t.inverse) acc.add_scaled(v, F.neg(qq_));
  return acc.take();
}

SparseVec AlgebraEngine::multiply(const SparseVec& x, const SparseVec& y) const {
  const Field& F = *field_;
  if (x.empty() || y.empty()) return {};
  SparseAccumulator acc(F, dim());
  if (y.size() <= x.size()) {
    // x * basis_j by walking the word of basis_j on the right of x.
    for (const auto& [j, c] : y) {
      SparseVec v = x;
      for (int letter : words_[j]) v = apply_right(v, {letter, false});
      acc.add_scaled(v, c);
    }
  } else {
    for (const auto& [i, c] : x) {
      SparseVec v = y;
      const auto& w = words_[i];
      for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_left({*it, false}, v);
      acc.add_scaled(v, c);
    }
  }
  return acc.take();
}

SparseVec AlgebraEngine::sigma(const SparseVec& x) const {
  SparseAccumulator acc(*field_, dim());
  for (const auto& [k, c] : x) acc.add_scaled(sigma_[k], c);
  return acc.take();
}

AlgebraElement AlgebraEngine::zero() const { return {shared_from_this(), {}}; }
AlgebraElement AlgebraEngine::one() const { return {shared_from_this(), sparse_unit(*field_, 0)}; }
AlgebraElement AlgebraEngine::scalar(const Scalar& c) const {
  if (field_->is_zero(c)) return zero();
  return {shared_from_this(), {{0, c}}};
}
AlgebraElement AlgebraEngine::basis(int i) const { return {shared_from_this(), sparse_unit(*field_, i)}; }

AlgebraElement AlgebraEngine::word(const Word& w) const {
  SparseVec v = sparse_unit(*field_, 0);
  for (const auto& t : w) {
    if (t.gen < 0 || t.gen >= gens_.count()) throw EngineError("letter out of range");
    if (t.gen == 0 && t.inverse) throw EngineError("e1 is not invertible");
    v = apply_right(v, t);
  }
  return {shared_from_this(), std::move(v)};
}

AlgebraElement AlgebraEngine::sigma(const AlgebraElement& x) const { return {shared_from_this(), sigma(x.coords())}; }

// ------------------------------------------------------------- JSON format

nlohmann::json AlgebraEngine::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["kind"] = "qwb-engine";
  j["r"] = r();
  j["s"] = s();
  j["field"] = field_->spec();
  j["dim"] = dim();
  j["words"] = words_;
  j["prefix_parent"] = node_parent_;
  j["prefix_letter"] = node_letter_;
  j["prefix_basis"] = node_basis_;
  nlohmann::json mats = nlohmann::json::array();
  for (int gen = 0; gen < gens_.count(); ++gen) {
    nlohmann::json triplets = nlohmann::json::array();
    for (int i = 0; i < dim(); ++i)
      for (const auto& [k, c] : right_[gen][i]) triplets.push_back({i, k, field_->format(c)});
    mats.push_back({{"generator", gens_.name(gen)}, {"entries", std::move(triplets)}});
  }
  j["right"] = std::move(mats);
  return j;
}

EnginePtr AlgebraEngine::from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != 1 || j.at("kind").get<std::string>() != "qwb-engine")
      throw EngineError("unsupported engine file");
    std::shared_ptr<AlgebraEngine> eng(new AlgebraEngine());
    eng->field_ = Field::parse(j.at("field").get<std::string>());
    const Field& F = *eng->field_;
    eng->gens_ = {j.at("r").get<int>(), j.at("s").get<int>()};
    eng->words_ = j.at("words").get<std::vector<std::vector<int>>>();
    eng->node_parent_ = j.at("prefix_parent").get<std::vector<int>>();
    eng->node_letter_ = j.at("prefix_letter").get<std::vector<int>>();
    eng->node_basis_ = j.at("prefix_basis").get<std::vector<int>>();
    const int n = j.at("dim").get<int>();
    if (static_cast<int>(eng->words_.size()) != n) throw EngineError("engine file: word count differs from dim");
    eng->qq_ = F.sub(F.q(), q_power(F, -1));
    eng->rho_ = F.rho();
    eng->delta_ = qwb::delta(F);
    const auto& mats = j.at("right");
    if (static_cast<int>(mats.size()) != eng->gens_.count()) throw EngineError("engine file: generator count");
    eng->right_.assign(eng->gens_.count(), std::vector<SparseVec>(n));
    for (int gen = 0; gen < eng->gens_.count(); ++gen)
      for (const auto& t : mats[gen].at("entries")) {
        int i = t.at(0).get<int>(), k = t.at(1).get<int>();
        if (i < 0 || i >= n || k < 0 || k >= n) throw EngineError("engine file: index out of range");
        eng->right_[gen][i].emplace_back(k, F.parse_scalar(t.at(2).get<std::string>()));
      }
    for (auto& m : eng->right_)
      for (auto& row : m)
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    eng->finish();
    return eng;
  } catch (const nlohmann::json::exception& e) {
    throw EngineError(std::string("engine file: ") + e.what());
  }
}

// ---------------------------------------------------------- AlgebraElement

FieldElement AlgebraElement::coefficient(int basis_index) const {
  return {engine_->field(), sparse_get(*engine_->field(), v_, basis_index)};
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (!engine_ || !o.engine_ || engine_.get() != o.engine_.get())
    throw EngineError("elements belong to different engines");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_same(o);
  return {engine_, sparse_add(*engine_->field(), v_, o.v_)};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_same(o);
  return {engine_, sparse_sub(*engine_->field(), v_, o.v_)};
}

AlgebraElement AlgebraElement::operator-() const {
  return {engine_, sparse_scale(*engine_->field(), v_, engine_->field()->from_int(-1))};
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same(o);
  return {engine_, engine_->multiply(v_, o.v_)};
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  return {engine_, sparse_scale(*engine_->field(), v_, c)};
}

AlgebraElement AlgebraElement::times(const Token& t) const { return {engine_, engine_->apply_right(v_, t)}; }

AlgebraElement AlgebraElement::times(const Word& w) const {
  SparseVec v = v_;
  for (const auto& t : w) v = engine_->apply_right(v, t);
  return {engine_, std::move(v)};
}

AlgebraElement AlgebraElement::left_times(const Token& t) const { return {engine_, engine_->apply_left(t, v_)}; }

AlgebraElement AlgebraElement::left_times(const Word& w) const {
  SparseVec v = v_;
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = engine_->apply_left(*it, v);
  return {engine_, std::move(v)};
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same(b);
  return a.v_ == b.v_;
}

std::string AlgebraElement::to_string() const {
  if (v_.empty()) return "0";
  const Field& F = *engine_->field();
  std::string out;
  for (const auto& [k, c] : v_) {
    if (!out.empty()) out += " + ";
    std::vector<Token> w;
    for (int letter : engine_->basis_word(k)) w.push_back({letter, false});
    std::string ws = w.empty() ? "1" : word_to_string(engine_->generators(), w);
    out += "(" + F.format(c) + ")*[" + ws + "]";
  }
  return out;
}

}  // namespace qwb
