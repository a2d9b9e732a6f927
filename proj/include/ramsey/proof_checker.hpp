#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

enum class Verdict { Pass, Fail, Flag };

// one quantified instance of an inequality: lhs related to rhs, with the
// verdict the evaluation produced and the verdict the argument requires
struct ProofPoint {
    std::string point;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    Verdict got = Verdict::Fail;
    Verdict want = Verdict::Pass;
};

struct ProofStep {
    std::string id;
    std::vector<ProofPoint> points;
    bool limit_reached = false;
    bool ok() const;
};

const std::vector<std::string>& proof_step_ids();
ProofStep run_proof_step(const std::string& id);
std::vector<ProofStep> run_all_proof_steps();

ProofStep check_theorem6_count();
ProofStep check_claim_bipartite_slacks();
ProofStep check_eq4();
ProofStep check_eq5();
ProofStep check_eq6();
ProofStep check_lemma9_slacks();
ProofStep check_theorem10_edge_counts();
// 0 = default enumeration budget (ample for the full pass)
ProofStep check_k11_cover(std::uint64_t placement_budget = 0);

const char* to_string(Verdict v);
std::string format_step(const ProofStep& step);

} // namespace ramsey
