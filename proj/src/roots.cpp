#include "helix/roots.hpp"

#include <deque>
#include <map>
#include <set>

namespace helix {

std::vector<Root> find_roots(const Seed& s, int depth) {
    if (depth < 0) throw Error("find_roots depth must be >= 0");
    std::vector<Root> out;
    std::set<Vec> seen_roots;
    std::set<Vec> seen_seeds;  // canonical basis storage, flattened

    struct Node {
        Seed seed;
        std::vector<MutStep> word;
        int depth;
    };
    std::deque<Node> queue;
    queue.push_back(Node{s, {}, 0});
    seen_seeds.insert(s.canonical().basis.a);

    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        for (int j = 0; j < cur.seed.n(); ++j)
            for (int k = 0; k < cur.seed.n(); ++k) {
                if (j == k || !(cur.seed.psi_of(j) == cur.seed.psi_of(k))) continue;
                Vec alpha = vsub(cur.seed.e(j), cur.seed.e(k));
                if (seen_roots.count(alpha)) continue;
                if (intersection_form(s, alpha, alpha) != -2) throw Error("root with self-pairing != -2");
                seen_roots.insert(alpha);
                out.push_back(Root{alpha, cur.word, j, k});
            }
        if (cur.depth == depth) continue;
        for (int j = 0; j < cur.seed.n(); ++j)
            for (int eps : {+1, -1}) {
                Seed next = mutate_seed(cur.seed, j, eps);
                Vec key = next.canonical().basis.a;
                if (!seen_seeds.insert(key).second) continue;
                std::vector<MutStep> word = cur.word;
                word.push_back(MutStep{j, eps});
                queue.push_back(Node{std::move(next), std::move(word), cur.depth + 1});
            }
    }
    return out;
}

IMat swap_parallel(const Seed& s, int j, int k) {
    if (j == k) throw Error("swap indices must differ");
    if (!(s.psi_of(j) == s.psi_of(k))) throw Error("swap requires psi(e_j) = psi(e_k)");
    int n = s.n();
    IMat perm = IMat::identity(n);
    perm.at(j, j) = perm.at(k, k) = 0;
    perm.at(j, k) = perm.at(k, j) = 1;
    return mat_mul(s.basis, mat_mul(perm, inverse_unimodular(s.basis)));
}

}  // namespace helix
