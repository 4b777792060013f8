#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "dahaknots/cli_config.hpp"
#include "dahaknots/errors.hpp"

int main(int argc, char** argv) {
    using namespace dahaknots;
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        RunConfig cfg = parse_args(args);
        std::ostringstream buf;
        int code = execute(cfg, buf);
        if (cfg.output_path) {
            std::ofstream f(*cfg.output_path);
            if (!f) {
                std::cerr << "error: cannot open " << *cfg.output_path << "\n";
                return 2;
            }
            f << buf.str();
        } else {
            std::cout << buf.str();
        }
        return code;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n" << usage_text();
        return 2;
    } catch (const pole_error& e) {
        std::cerr << "pole during specialization: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
