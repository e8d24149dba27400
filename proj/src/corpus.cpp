#include "helix/corpus.hpp"

namespace helix {

namespace {

Collection line_bundles(const Surface& S, const std::vector<Vec>& divisors) {
    Collection c;
    c.S = S;
    for (const Vec& d : divisors) c.objs.push_back(line_bundle(S, d));
    return c;
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> out;

    Surface p2 = Surface::blowup_p2(0);
    Surface q = Surface::p1xp1();
    Surface dp1 = Surface::blowup_p2(1);
    Surface dp2 = Surface::blowup_p2(2);
    Surface dp3 = Surface::blowup_p2(3);

    out.push_back({"p1xp1-bs", "O, O(1,0), O(0,1), O(1,1) on P1xP1",
                   line_bundles(q, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})});
    out.push_back({"p1xp1-alt", "O, O(1,0), O(1,1), O(2,1) on P1xP1 (different rank/degree pattern)",
                   line_bundles(q, {{0, 0}, {1, 0}, {1, 1}, {2, 1}})});
    out.push_back({"p2-beilinson", "O, O(1), O(2) on P2", line_bundles(p2, {{0}, {1}, {2}})});
    out.push_back({"dp1-lines", "O, O(H-E1), O(H), O(2H-E1) on dP1",
                   line_bundles(dp1, {{0, 0}, {1, -1}, {1, 0}, {2, -1}})});
    out.push_back({"dp2-lines", "O, O(H-E1), O(H-E2), O(H), O(2H-E1-E2) on dP2",
                   line_bundles(dp2, {{0, 0, 0}, {1, -1, 0}, {1, 0, -1}, {1, 0, 0}, {2, -1, -1}})});
    out.push_back({"dp3-lines", "O, O(H-E1), O(H-E2), O(H-E3), O(H), O(2H-E1-E2-E3) on dP3",
                   line_bundles(dp3, {{0, 0, 0, 0},
                                      {1, -1, 0, 0},
                                      {1, 0, -1, 0},
                                      {1, 0, 0, -1},
                                      {1, 0, 0, 0},
                                      {2, -1, -1, -1}})});

    for (const CorpusEntry& e : out) check_very_strong(e.collection);
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

const Collection& corpus_collection(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return e.collection;
    throw Error("no corpus entry named '" + name + "'");
}

}  // namespace helix
