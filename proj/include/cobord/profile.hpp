#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cobord/gf2poly.hpp"

namespace cobord {

struct Topology {
    int euler_char = 0;
    int orientable = 0;
    bool operator==(const Topology&) const = default;
};

// Characteristic numbers of the normal bundle of one fixed component:
// for every partition of dim, the mod-2 value of the corresponding
// monomial in the normal classes against the fundamental class.
// The map is total over partitions of dim; missing data is an error,
// not a zero.
class NormalProfile {
public:
    NormalProfile(int dim, std::map<Partition, int> bits);

    static NormalProfile point();        // dim 0, [] -> 1
    static NormalProfile zeros(int dim); // dim >= 1, every bit 0

    int dim() const { return dim_; }
    int bit(const Partition& p) const;
    const std::map<Partition, int>& bits() const { return bits_; }
    bool all_zero() const;

    bool operator==(const NormalProfile&) const = default;

private:
    int dim_ = 0;
    std::map<Partition, int> bits_;
};

// Pair a homogeneous degree-d polynomial with a dim-d profile.
int evaluate(const PolyGF2& p, const NormalProfile& prof);

struct FixedComponent {
    NormalProfile profile;
    std::string label;
    std::optional<Topology> topology;
};

// The fixed-point data of one involution: a multiset of components
// inside an ambient manifold, plus optional Euler-characteristic parity.
struct InvolutionProfile {
    std::vector<FixedComponent> components;
    int ambient_dim = 0;
    std::optional<int> euler_parity;

    void validate() const;
};

// I(n, M, tau): sum over components of dimension < n of the evaluation
// of I_{n,dim} on the component's normal profile. Defined for any n >= 0,
// including n below the ambient dimension.
int invariant(int n, const InvolutionProfile& prof);

nlohmann::json to_json(const NormalProfile& p);
nlohmann::json to_json(const FixedComponent& c);
nlohmann::json to_json(const InvolutionProfile& p);
NormalProfile normal_profile_from_json(const nlohmann::json& j);
FixedComponent component_from_json(const nlohmann::json& j);
InvolutionProfile profile_from_json(const nlohmann::json& j);

}  // namespace cobord
