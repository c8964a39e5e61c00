// Runs every acceptance criterion and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <iostream>

#include "nvol/verify.hpp"

int main() {
    auto start = std::chrono::steady_clock::now();
    bool all = true;
    for (int id : nvol::suite_criteria("all")) {
        nvol::CriterionResult r = nvol::run_criterion(id);
        all = all && r.pass;
        std::printf("criterion %2d  %-4s  %-40s (%.2fs)\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
        if (!r.pass)
            for (const auto& c : r.checks)
                if (!c.at("pass").get<bool>()) std::cout << "    failed: " << c.dump() << "\n";
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool fast = total < 60;
    std::printf("total runtime %.2fs (%s, budget 60s)\n", total, fast ? "within" : "over");
    return all && fast ? 0 : 1;
}
