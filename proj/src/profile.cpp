#include "cobord/profile.hpp"

#include <stdexcept>

#include "cobord/ind.hpp"

namespace cobord {

NormalProfile::NormalProfile(int dim, std::map<Partition, int> bits)
    : dim_(dim), bits_(std::move(bits)) {
    if (dim_ < 0) throw std::invalid_argument("NormalProfile: negative dimension");
    auto all = partitions_of(dim_);
    if (bits_.size() != all.size())
        throw std::invalid_argument("NormalProfile: map must be total over partitions of dim");
    for (const auto& p : all) {
        auto it = bits_.find(p);
        if (it == bits_.end())
            throw std::invalid_argument("NormalProfile: missing partition " + p.str());
        if (it->second != 0 && it->second != 1)
            throw std::invalid_argument("NormalProfile: values must be bits");
    }
    if (dim_ == 0 && bits_.at(Partition()) != 1)
        throw std::invalid_argument("NormalProfile: a point evaluates constants to 1");
}

NormalProfile NormalProfile::point() {
    return NormalProfile(0, {{Partition(), 1}});
}

NormalProfile NormalProfile::zeros(int dim) {
    if (dim < 1) throw std::invalid_argument("NormalProfile::zeros: dim must be >= 1");
    std::map<Partition, int> bits;
    for (const auto& p : partitions_of(dim)) bits[p] = 0;
    return NormalProfile(dim, std::move(bits));
}

int NormalProfile::bit(const Partition& p) const {
    auto it = bits_.find(p);
    if (it == bits_.end())
        throw std::invalid_argument("NormalProfile: no value for partition " + p.str());
    return it->second;
}

bool NormalProfile::all_zero() const {
    for (auto& [p, b] : bits_)
        if (b) return false;
    return true;
}

int evaluate(const PolyGF2& p, const NormalProfile& prof) {
    if (!p.is_zero() && !p.is_homogeneous(prof.dim()))
        throw std::invalid_argument("evaluate: polynomial degree does not match profile dimension");
    int acc = 0;
    for (const auto& m : p.terms()) acc ^= prof.bit(Partition::of_monomial(m));
    return acc;
}

void InvolutionProfile::validate() const {
    if (ambient_dim < 0) throw std::invalid_argument("InvolutionProfile: negative ambient dimension");
    for (const auto& c : components) {
        if (c.profile.dim() >= ambient_dim)
            throw std::invalid_argument(
                "InvolutionProfile: fixed component of dimension >= ambient (component '" +
                c.label + "')");
        if (c.topology && c.profile.dim() == 2 && c.topology->orientable &&
            c.topology->euler_char % 2 != 0)
            throw std::invalid_argument(
                "InvolutionProfile: orientable surface with odd Euler characteristic ('" +
                c.label + "')");
    }
    if (euler_parity && *euler_parity != 0 && *euler_parity != 1)
        throw std::invalid_argument("InvolutionProfile: euler_parity must be a bit");
}

int invariant(int n, const InvolutionProfile& prof) {
    if (n < 0) throw std::invalid_argument("invariant: n must be >= 0");
    prof.validate();
    int acc = 0;
    for (const auto& c : prof.components)
        if (c.profile.dim() < n) acc ^= evaluate(ind_poly(n, c.profile.dim()), c.profile);
    return acc;
}

nlohmann::json to_json(const NormalProfile& p) {
    nlohmann::json charnums = nlohmann::json::object();
    for (const auto& [part, bit] : p.bits()) charnums[part.str()] = bit;
    return {{"dim", p.dim()}, {"charnums", charnums}};
}

nlohmann::json to_json(const FixedComponent& c) {
    nlohmann::json j = to_json(c.profile);
    if (!c.label.empty()) j["label"] = c.label;
    if (c.topology)
        j["topology"] = {{"euler_char", c.topology->euler_char},
                         {"orientable", c.topology->orientable}};
    return j;
}

nlohmann::json to_json(const InvolutionProfile& p) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : p.components) comps.push_back(to_json(c));
    nlohmann::json j = {{"ambient_dim", p.ambient_dim}, {"components", comps}};
    j["euler_parity"] = p.euler_parity ? nlohmann::json(*p.euler_parity) : nlohmann::json();
    return j;
}

NormalProfile normal_profile_from_json(const nlohmann::json& j) {
    if (!j.contains("dim") || !j.contains("charnums"))
        throw std::invalid_argument("profile JSON: component needs 'dim' and 'charnums'");
    std::map<Partition, int> bits;
    for (auto& [key, val] : j.at("charnums").items())
        bits[Partition::parse(key)] = val.get<int>();
    return NormalProfile(j.at("dim").get<int>(), std::move(bits));
}

FixedComponent component_from_json(const nlohmann::json& j) {
    FixedComponent c{normal_profile_from_json(j), j.value("label", std::string()), std::nullopt};
    if (j.contains("topology") && !j.at("topology").is_null()) {
        const auto& t = j.at("topology");
        c.topology = Topology{t.at("euler_char").get<int>(), t.at("orientable").get<int>()};
    }
    return c;
}

InvolutionProfile profile_from_json(const nlohmann::json& j) {
    InvolutionProfile p;
    p.ambient_dim = j.at("ambient_dim").get<int>();
    if (j.contains("euler_parity") && !j.at("euler_parity").is_null())
        p.euler_parity = j.at("euler_parity").get<int>();
    for (const auto& cj : j.at("components")) p.components.push_back(component_from_json(cj));
    p.validate();
    return p;
}

}  // namespace cobord
