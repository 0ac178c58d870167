#include <algorithm>  // for find
#include <set>        // for set

#include "ordsg/error.hpp"
#include "ordsg/small-instances.hpp"

namespace ordsg {

  LeftZero::LeftZero(std::vector<std::string> carrier)
      : _carrier(std::move(carrier)) {
    if (_carrier.empty()) {
      throw InvalidArgument("left_zero: carrier must be non-empty");
    }
    std::set<std::string> seen;
    for (auto const& c : _carrier) {
      if (c.empty()) {
        throw InvalidArgument("left_zero: carrier names must be non-empty");
      }
      if (!seen.insert(c).second) {
        throw InvalidArgument("left_zero: duplicate carrier name \"" + c
                              + "\"");
      }
    }
  }

  std::string LeftZero::name() const {
    std::string out = "left_zero(";
    for (std::size_t i = 0; i < _carrier.size(); ++i) {
      out += (i == 0 ? "" : ",") + _carrier[i];
    }
    return out + ")";
  }

  void LeftZero::validate(LeftZeroElement const& x) const {
    if (x.index >= _carrier.size()) {
      throw DomainError("element index " + std::to_string(x.index)
                        + " outside " + name());
    }
  }

  std::vector<LeftZeroElement> LeftZero::elements() const {
    std::vector<LeftZeroElement> out;
    for (std::size_t i = 0; i < _carrier.size(); ++i) {
      out.push_back({i});
    }
    return out;
  }

  LeftZeroElement LeftZero::parse(std::string_view text) const {
    auto it = std::find(_carrier.begin(), _carrier.end(), text);
    if (it == _carrier.end()) {
      throw DomainError("\"" + std::string(text)
                        + "\" is not in the carrier of " + name());
    }
    return {static_cast<std::size_t>(it - _carrier.begin())};
  }

  std::string LeftZero::render(LeftZeroElement const& x) const {
    validate(x);
    return _carrier[x.index];
  }

}  // namespace ordsg
