#ifndef EQALG_ACCEPTANCE_HPP
#define EQALG_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace eqalg {

struct AcceptanceResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // failure explanation, empty on success
};

// Runs the full acceptance suite. The seed only affects the randomized
// property checks (criterion 9); all other results are deterministic.
std::vector<AcceptanceResult> run_acceptance(unsigned long seed);

// Reads EQALG_SEED from the environment (default 20260826).
unsigned long acceptance_seed_from_env();

}  // namespace eqalg

#endif
