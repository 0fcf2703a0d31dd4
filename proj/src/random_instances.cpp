#include "relweights/random_instances.hpp"

#include <string>
#include <vector>

namespace relweights {

FunctionSet random_function_set(Rng& rng, std::size_t max_members, std::size_t max_domain) {
    const std::size_t members = 1 + rng.next_index(max_members);
    const std::size_t domain = 1 + rng.next_index(max_domain);
    std::vector<std::string> member_labels, domain_labels;
    for (std::size_t i = 0; i < members; ++i) member_labels.push_back("m" + std::to_string(i + 1));
    for (std::size_t j = 0; j < domain; ++j) domain_labels.push_back("v" + std::to_string(j + 1));
    std::vector<double> data(members * domain);
    for (double& v : data) v = rng.next_double();
    return FunctionSet(IndexSet::make(std::move(domain_labels)),
                       IndexSet::make(std::move(member_labels)), std::move(data));
}

}  // namespace relweights
