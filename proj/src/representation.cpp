#include "rtorsion/representation.hpp"

#include <fstream>
#include <stdexcept>

#include "rtorsion/serialize.hpp"

namespace rt {

Representation::Representation(const PermGroup& g, const std::vector<Matrix<Cyclotomic>>& generator_images,
                               std::string name, int dimension)
    : name_(std::move(name)) {
  const auto& gens = g.generators();
  if (generator_images.size() != gens.size())
    throw std::invalid_argument("representation needs one matrix per group generator");
  dim_ = generator_images.empty() ? dimension : static_cast<int>(generator_images[0].rows());
  if (dim_ < 0) throw std::invalid_argument("representation dimension unknown");
  for (const auto& m : generator_images)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("representation matrices must be square of equal size");

  // Spanning tree of the Cayley graph from the identity.
  const int n = g.order();
  std::vector<bool> done(n, false);
  mats_.assign(n, Matrix<Cyclotomic>());
  mats_[PermGroup::identity()] = Matrix<Cyclotomic>::Identity(dim_, dim_);
  done[PermGroup::identity()] = true;
  std::vector<int> queue{PermGroup::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = g.mul(x, gens[k]);
      if (done[y]) continue;
      done[y] = true;
      mats_[y] = multiply(mats_[x], generator_images[k]);
      queue.push_back(y);
    }
  }
  // Multiplicativity on every (element, generator) pair implies it everywhere.
  for (int x = 0; x < n; ++x)
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!(multiply(mats_[x], generator_images[k]) == mats_[g.mul(x, gens[k])]))
        throw std::invalid_argument("generator images do not define a representation");
  for (const auto& m : mats_) {
    Cyclotomic d = determinant(m);
    bool known = false;
    for (const auto& e : dets_)
      if (e == d) known = true;
    if (!known) dets_.push_back(d);
  }
}

Representation Representation::conjugated(const Matrix<Cyclotomic>& p) const {
  Representation r = *this;
  const Matrix<Cyclotomic> pinv = inverse(p);
  for (auto& m : r.mats_) m = multiply(multiply(p, m), pinv);
  r.name_ = name_ + "-conjugated";
  return r;
}

Matrix<Integer> permutation_matrix(const Perm& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  Matrix<Integer> m = Matrix<Integer>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(p[i], i) = 1;
  return m;
}

Matrix<Integer> standard_matrix(const Perm& p) {
  // Column i is sigma(e_i - e_n) = f_sigma(i) - f_sigma(n) with f_n = 0.
  const auto n = static_cast<Eigen::Index>(p.size());
  if (n < 2) return Matrix<Integer>(0, 0);
  Matrix<Integer> m = Matrix<Integer>::Zero(n - 1, n - 1);
  const int last = p[n - 1];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (p[i] != n - 1) m(p[i], i) += 1;
    if (last != n - 1) m(last, i) -= 1;
  }
  return m;
}

Matrix<Integer> standard_rep_A5(const Perm& p) {
  if (p.size() != 5) throw std::invalid_argument("standard_rep_A5 needs a degree-5 permutation");
  return standard_matrix(p);
}

namespace {

Representation from_generator_matrices(const PermGroup& g, Matrix<Integer> (*f)(const Perm&), const std::string& name) {
  std::vector<Matrix<Cyclotomic>> images;
  for (int x : g.generators()) images.push_back(convert<Cyclotomic>(f(g.element(x))));
  const auto dim = static_cast<int>(f(g.element(PermGroup::identity())).rows());
  return Representation(g, images, name, dim);
}

}  // namespace

Representation standard_representation(const PermGroup& g) {
  return from_generator_matrices(g, standard_matrix, "standard");
}

Representation permutation_representation(const PermGroup& g) {
  return from_generator_matrices(g, permutation_matrix, "permutation");
}

Representation trivial_representation(const PermGroup& g, int n) {
  if (n < 1) throw std::invalid_argument("trivial representation needs dimension >= 1");
  std::vector<Matrix<Cyclotomic>> images(g.generators().size(), Matrix<Cyclotomic>::Identity(n, n));
  return Representation(g, images, "trivial-" + std::to_string(n), n);
}

Representation named_representation(const PermGroup& g, const std::string& name) {
  if (name == "A5-standard") {
    if (g.degree() != 5) throw std::invalid_argument("A5-standard needs a group of degree 5");
    return standard_representation(g);
  }
  if (name == "standard") return standard_representation(g);
  if (name == "permutation") return permutation_representation(g);
  if (name.rfind("trivial-", 0) == 0) return trivial_representation(g, std::stoi(name.substr(8)));
  throw std::invalid_argument("unknown representation: " + name);
}

Representation representation_from_json(const PermGroup& g, const nlohmann::json& j) {
  std::vector<Matrix<Cyclotomic>> images;
  for (const auto& m : j.at("generators")) images.push_back(decode_cyclotomic_matrix(m));
  return Representation(g, images, j.value("name", std::string("explicit")));
}

Representation load_representation(const PermGroup& g, const std::string& name_or_path) {
  std::ifstream in(name_or_path);
  if (!in) return named_representation(g, name_or_path);
  return representation_from_json(g, nlohmann::json::parse(in));
}

}  // namespace rt
