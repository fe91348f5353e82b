#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "losim/cli.hpp"
#include "losim/errors.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const losim::RunConfig cfg = losim::parse_config(args);
        return losim::run(cfg, std::cout);
    } catch (const losim::validation_error& e) {
        std::cerr << "losim: " << e.what() << "\n";
        return losim::kExitUsage;
    } catch (const losim::numerical_error& e) {
        std::cerr << "losim: " << e.what() << "\n";
        return losim::kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "losim: " << e.what() << "\n";
        return losim::kExitUsage;
    }
}
