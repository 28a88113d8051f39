#pragma once

#include <functional>
#include <string>
#include <vector>

namespace acceptance {

struct Outcome {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Runs every criterion in order, reporting each as it finishes.
std::vector<Outcome> run_all(const std::function<void(const Outcome&)>& on_done = {});

std::string format_line(const Outcome& o);

}  // namespace acceptance
