#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/address.hpp"
#include "ordcalc/attrs.hpp"
#include "ordcalc/finposet.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

enum class Cmp { Less, Greater, Equal, Incomparable };

// Concrete element model valid under an instantiation: the symbolic kappa
// leaf is read as a fixed countable ordinal and QKappa as the rationals.
// Everything derived through it validates instantiation-invariant facts
// only; kappa-level claims are never checked through the sampler.
struct Instantiation {
    CnfOrdinal kappa_value; // default w^2

    static Instantiation standard();
    std::string describe() const;
};

// Deterministic generator; identical parameters give identical streams.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound); // uniform-ish in [0, bound)
};

Cmp compare(const TermPtr& t, const Address& a, const Address& b,
            const Instantiation& inst = Instantiation::standard());

Cmp invert(Cmp c);

struct Sample {
    TermPtr term;
    std::uint64_t seed = 0;
    std::vector<Address> addresses;
    FinPoset poset;      // induced order on the addresses
    bool truncated = false; // term had fewer elements than requested
    Instantiation inst;

    std::string to_json() const;
};

struct SampleWeights {
    int leaf_width = 6;   // spread of integer/rational/ordinal coordinates
    int max_stage = 3;    // deepest direct-limit stage sampled
};

// n distinct addresses by seeded recursive descent, ordered pairwise via
// compare. Terms with fewer than n elements yield a smaller, flagged sample.
Sample sample_restriction(const TermPtr& t, int n, std::uint64_t seed,
                          const SampleWeights& weights = SampleWeights(),
                          const Instantiation& inst = Instantiation::standard());

struct Violation {
    std::string property;
    std::string detail; // counterexample certificate, human-readable
    std::string term;
    std::vector<std::string> witnesses; // addresses or subsets involved
};

struct OracleBudget {
    int samples = 4;
    int sample_size = 24;
    int rank_sample_size = 10;
    int chain_length = 8;
    std::uint64_t seed = 1;
};

// Probes a synthesized report against sampled finite restrictions:
// linearity transfers, antichain caps hold, claimed non-well-foundedness
// is witnessed by an explicit chain, and the rho bound dominates the exact
// rank of every sampled restriction.
std::vector<Violation> oracle_check(const TermPtr& t, const AttrReport& report,
                                    const OracleBudget& budget = OracleBudget());

// Constructive witness chains (descending/ascending in the term order),
// available when the attribute engine reports the corresponding
// well-foundedness flag false under the instantiation.
std::optional<std::vector<Address>> descending_chain(const TermPtr& t, int len,
                                                     const Instantiation& inst =
                                                         Instantiation::standard());
std::optional<std::vector<Address>> ascending_chain(const TermPtr& t, int len,
                                                    const Instantiation& inst =
                                                        Instantiation::standard());

// All addresses of a finite term, in no particular order.
std::vector<Address> enumerate_addresses(const TermPtr& t,
                                         const Instantiation& inst =
                                             Instantiation::standard());

} // namespace ordcalc
