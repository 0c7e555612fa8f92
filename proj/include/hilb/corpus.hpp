#pragma once

#include <string>
#include <vector>

#include "hilb/ideal.hpp"

namespace hilb {

// Built-in example ideals shared by the test suite and the CLI `examples`
// subcommand.  Every item is a homogeneous ideal together with the number of
// points r its quotient's Hilbert polynomial refers to.
struct CorpusItem {
    std::string name;
    std::string summary;
    Ideal ideal;
    long r = 0;
};

const std::vector<CorpusItem>& corpus();
const CorpusItem& corpus_item(const std::string& name);

// Independent Hilbert-function oracle: dim (S/I)_d computed as
// dim S_d minus the rank of the coefficient matrix of all monomial multiples
// of the generators landing in degree d.  No division, no Groebner bases —
// this cross-checks the standard-monomial count.
long hf_by_linear_algebra(const Ideal& ideal, long d);

// One entry of the verification battery: a named claim with the expected and
// observed values rendered as strings.
struct VerifyItem {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
};

// The full battery of reference checks behind `hilb verify-paper` and the
// acceptance binary.  Failures are reported in the items, never thrown.
std::vector<VerifyItem> verification_battery();
bool all_pass(const std::vector<VerifyItem>& items);

} // namespace hilb
