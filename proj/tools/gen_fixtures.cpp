#include <fstream>
#include <iostream>
#include <string>

#include "coho/session.hpp"

// Writes the bundled corpus to disk in the session wire format, one file per
// field. The shipped fixtures directory is the output of this tool; the
// session tests reload the files and compare against the in-memory corpus.

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures <output-dir>\n";
        return 1;
    }
    std::string dir = argv[1];
    struct Entry {
        const char* file;
        coho::FieldSpec spec;
    };
    const Entry entries[] = {
        {"corpus_q.json", {coho::FieldSpec::Kind::Rationals, 0}},
        {"corpus_f2.json", {coho::FieldSpec::Kind::PrimeField, 2}},
        {"corpus_f5.json", {coho::FieldSpec::Kind::PrimeField, 5}},
    };
    for (const auto& e : entries) {
        auto text = coho::emit_session(coho::builtin_session(e.spec));
        std::string path = dir + "/" + e.file;
        std::ofstream out(path);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 1;
        }
        out << text;
        std::cout << path << " (" << text.size() << " bytes)\n";
    }
    return 0;
}
