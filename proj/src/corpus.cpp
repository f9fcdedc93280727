#include "foxcolor/corpus.hpp"

#include <sstream>
#include <stdexcept>

namespace foxcolor {

const std::vector<CorpusEntry>& bundled_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"3_1", 3, "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)"},
        {"4_1", 4, "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)"},
        {"5_1", 5, "X(1,6,2,7);X(3,8,4,9);X(5,10,6,1);X(7,2,8,3);X(9,4,10,5)"},
        {"5_2", 5, "X(1,4,2,5);X(3,8,4,9);X(5,10,6,1);X(9,6,10,7);X(7,2,8,3)"},
        {"6_1", 6,
         "X(1,4,2,5);X(7,10,8,11);X(3,9,4,8);X(9,3,10,2);X(5,12,6,1);X(11,6,12,7)"},
        {"6_2", 6,
         "X(1,4,2,5);X(5,10,6,11);X(3,9,4,8);X(9,3,10,2);X(7,12,8,1);X(11,6,12,7)"},
        {"6_3", 6,
         "X(4,2,5,1);X(8,4,9,3);X(12,9,1,10);X(10,5,11,6);X(6,11,7,12);X(2,8,3,7)"},
        // (2,-2,2,-2)-pretzel diagram of the link L8n8
        {"L8n8", 8,
         "X(1,4,10,9);X(9,10,8,5);X(1,2,11,12);X(12,11,6,5);"
         "X(3,2,14,13);X(13,14,6,7);X(3,4,15,16);X(16,15,8,7)"},
    };
    return corpus;
}

const CorpusEntry* corpus_lookup(const std::string& name) {
    for (const CorpusEntry& e : bundled_corpus())
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<CorpusEntry> load_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("corpus line missing 'name:' prefix: " + line);
        std::string name = line.substr(first, colon - first);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        out.push_back({name, 0, line.substr(colon + 1)});
    }
    return out;
}

std::string corpus_file_text() {
    std::ostringstream os;
    for (const CorpusEntry& e : bundled_corpus()) os << e.name << ": " << e.pd << "\n";
    return os.str();
}

}  // namespace foxcolor
