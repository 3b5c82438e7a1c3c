#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "strobowalk/run_spec.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return strobowalk::run_command(strobowalk::parse_args(args));
    } catch (const strobowalk::HelpRequested& help) {
        std::cout << help.text();
        return 0;
    } catch (const std::exception& e) {
        std::string message = e.what();
        std::replace(message.begin(), message.end(), '\n', ' ');
        std::cerr << "error: " << message << "\n";
        return 1;
    }
}
