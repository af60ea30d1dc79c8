#pragma once

#include <string>
#include <vector>

namespace orient {

// One desk-scale exhaustive verification of a structural statement used by
// the counting machinery.  `checked` counts individual instances.
struct LemmaResult {
    std::string id;
    bool pass = false;
    long long checked = 0;
    std::string detail;
};

// ids: holder, twin, clone, edge-delete, multipartite, ham, chain,
// ext-vertex, ext-edge, sc-bound, small-cliques; "all" expands to every id.
std::vector<std::string> lemma_ids();
LemmaResult verify_lemma(const std::string& id);
std::vector<LemmaResult> verify_lemmas(const std::string& which);

}  // namespace orient
