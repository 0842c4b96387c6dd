#ifndef PARTFORGE_REGISTRY_HPP
#define PARTFORGE_REGISTRY_HPP

#include "partforge/core.hpp"
#include "partforge/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace partforge {

// Identities on the colored classes themselves.

/// A = B_sigma (each sigma, plus id) = C = product, plus forward images.
IdentityReport verify_colored_difference(int n, int m_max, const std::vector<Permutation>& sigmas, unsigned threads = 1);
/// A_RM = B_RM = product, plus forward images.
IdentityReport verify_colored_congruence(int n, int R, int M, int m_max, unsigned threads = 1);
/// A_M = B_M = product, plus forward images.
IdentityReport verify_colored_gap(int n, int M, int m_max, unsigned threads = 1);
/// A = B = C, plus conjugates of B.
IdentityReport verify_colored_conjugate(int n, int m_max, unsigned threads = 1);

/// Raw option values by name, e.g. {"a": "1,2", "N": "3"}.
using ParamMap = std::map<std::string, std::string>;

struct TheoremEntry {
    std::string name;
    std::string summary;
    /// Option names the entry reads, with defaults.
    std::vector<std::pair<std::string, std::string>> params;
    int default_m_max = 12;
    std::function<IdentityReport(const ParamMap&, int m_max, unsigned threads)> run;
};

const std::vector<TheoremEntry>& theorem_registry();
const TheoremEntry* find_theorem(const std::string& name);

/// Fills in defaults and runs.  Throws std::invalid_argument on bad params.
IdentityReport run_theorem(const TheoremEntry& entry, const ParamMap& given, std::optional<int> m_max, unsigned threads);

} // namespace partforge

#endif
