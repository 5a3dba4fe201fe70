#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darboux/error.hpp"
#include "darboux/extension.hpp"
#include "darboux/poset.hpp"

namespace darboux {

/// The poset OP(domain, codomain) of monotone maps with the pointwise order,
/// materialized explicitly.
class FunctionSpace {
 public:
  FunctionSpace(Poset domain, Poset codomain, std::size_t max_size = 4096)
      : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    EnumerationBudget budget;
    budget.max_results = max_size;
    maps_ = enumerate_monotone(domain_, codomain_, budget);
    std::vector<std::string> names;
    names.reserve(maps_.size());
    for (Element i = 0; i < maps_.size(); ++i) {
      index_.emplace(maps_[i], i);
      std::string label = "[";
      for (std::size_t k = 0; k < maps_[i].size(); ++k) {
        if (k) label += ",";
        label += codomain_.name(maps_[i][k]);
      }
      names.push_back(label + "]");
    }
    poset_ = poset_from_order(std::move(names), [&](Element a, Element b) {
      return pointwise_leq(maps_[a], maps_[b], codomain_);
    });
  }

  const Poset& domain() const { return domain_; }
  const Poset& codomain() const { return codomain_; }
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return maps_.size(); }

  const Assignment& map(Element i) const { return maps_[i]; }

  std::optional<Element> find(const Assignment& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Element index_of(const Assignment& f) const {
    if (auto i = find(f)) return *i;
    fail(ErrorCode::not_monotone, "map is not an element of the function space");
  }

  /// ev_p : OP(P, P') -> P'.
  MonotoneMap evaluation(Element p) const {
    Assignment a(maps_.size());
    for (Element i = 0; i < maps_.size(); ++i) a[i] = maps_[i][p];
    return {poset_, codomain_, std::move(a)};
  }

 private:
  Poset domain_;
  Poset codomain_;
  Poset poset_;
  std::vector<Assignment> maps_;
  std::map<Assignment, Element> index_;
};

}  // namespace darboux
