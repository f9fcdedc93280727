// Compares the OpenMP classify kernel against the serial reference on a
// larger census workload.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "foxcolor/colorset.hpp"

using namespace foxcolor;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
    int m = argc > 1 ? std::atoi(argv[1]) : 43;
    int size = argc > 2 ? std::atoi(argv[2]) : 6;

    Modulus mod(m);
    auto sets = enumerate_sets(mod, size, {0, 1, 2});
    std::cout << "classifying " << sets.size() << " sets of size " << size << " mod " << m
              << " (" << static_cast<long long>(m) * units(mod).size() << " automorphisms)\n";

    auto t0 = Clock::now();
    auto serial = classify_serial(sets);
    auto t1 = Clock::now();
    auto parallel = classify(sets);
    auto t2 = Clock::now();

    auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };
    std::cout << "serial:   " << ms(t0, t1) << " ms, " << serial.size() << " classes\n";
    std::cout << "parallel: " << ms(t1, t2) << " ms, " << parallel.size() << " classes\n";

    if (serial.size() != parallel.size()) {
        std::cerr << "MISMATCH between serial and parallel classification\n";
        return 1;
    }
    for (std::size_t i = 0; i < serial.size(); ++i) {
        if (!(serial[i].canonical == parallel[i].canonical) ||
            serial[i].members != parallel[i].members) {
            std::cerr << "MISMATCH in class " << i << "\n";
            return 1;
        }
    }
    double speedup = ms(t1, t2) > 0 ? double(ms(t0, t1)) / ms(t1, t2) : 0.0;
    std::cout << "speedup:  " << speedup << "x\n";
    return 0;
}
