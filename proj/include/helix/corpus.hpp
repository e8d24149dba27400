#pragma once
// Shipped very strong collections; every entry is validated at load time.

#include "helix/collection.hpp"

namespace helix {

struct CorpusEntry {
    std::string name;
    std::string description;
    Collection collection;
};

const std::vector<CorpusEntry>& corpus();
const Collection& corpus_collection(const std::string& name);

}  // namespace helix
