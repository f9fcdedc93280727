#pragma once

// The small bundled PD corpus and the `name: pd` corpus file format.

#include <istream>
#include <string>
#include <vector>

namespace foxcolor {

struct CorpusEntry {
    std::string name;
    int crossing_number;  // crossing number of the underlying link
    std::string pd;
};

// Standard diagrams of the small knots plus the L8n8 pretzel diagram.
const std::vector<CorpusEntry>& bundled_corpus();

// Returns the bundled entry with the given name, or nullptr.
const CorpusEntry* corpus_lookup(const std::string& name);

// Parses lines of the form `name: pd`; blank lines and '#' comments skipped.
std::vector<CorpusEntry> load_corpus(std::istream& in);

std::string corpus_file_text();

}  // namespace foxcolor
