#include "signet/network.hpp"

#include <fstream>

#include "signet/errors.hpp"
#include "signet/rng.hpp"
#include "signet/text.hpp"

namespace signet {

NetParams init_params(std::mt19937_64& rng) {
    NetParams p;
    for (double& w : p.flat) w = uniform_pm1(rng);
    return p;
}

double forward(const NetParams& p, std::span<const double, NetParams::kInputs> x) {
    double u = p.output(0);
    for (std::size_t i = 1; i <= NetParams::kHidden; ++i) {
        double z = p.hidden(i, 0);
        for (std::size_t k = 1; k <= NetParams::kInputs; ++k) {
            z += x[k - 1] * p.hidden(i, k);
        }
        u += p.output(i) * hidden_act(z);
    }
    return output_act(u);
}

std::vector<double> predict_all(const NetParams& p, std::span<const Sample> samples) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const Sample& s : samples) out.push_back(forward(p, s.x));
    return out;
}

double loss(const NetParams& p, std::span<const Sample> samples) {
    if (samples.empty()) throw ValidationError("loss: empty sample list");
    double sum = 0.0;
    for (const Sample& s : samples) {
        const double e = forward(p, s.x) - s.y;
        sum += e * e;
    }
    return sum / static_cast<double>(samples.size());
}

Gradient gradient(const NetParams& p, std::span<const Sample> samples) {
    if (samples.empty()) throw ValidationError("gradient: empty sample list");

    Gradient g;
    const double inv_n = 1.0 / static_cast<double>(samples.size());

    for (const Sample& s : samples) {
        double hidden_out[NetParams::kHidden];
        double u = p.output(0);
        for (std::size_t i = 1; i <= NetParams::kHidden; ++i) {
            double z = p.hidden(i, 0);
            for (std::size_t k = 1; k <= NetParams::kInputs; ++k) {
                z += s.x[k - 1] * p.hidden(i, k);
            }
            hidden_out[i - 1] = hidden_act(z);
            u += p.output(i) * hidden_out[i - 1];
        }
        const double yhat = output_act(u);

        // d(MSE)/du through the bipolar output: 2/n * e * (1 - yhat^2).
        const double du = 2.0 * inv_n * (yhat - s.y) * (1.0 - yhat * yhat);

        g.flat[NetParams::output_index(0)] += du;
        for (std::size_t i = 1; i <= NetParams::kHidden; ++i) {
            const double h = hidden_out[i - 1];
            g.flat[NetParams::output_index(i)] += du * h;
            const double dz = du * p.output(i) * h * (1.0 - h);
            g.flat[NetParams::hidden_index(i, 0)] += dz;
            for (std::size_t k = 1; k <= NetParams::kInputs; ++k) {
                g.flat[NetParams::hidden_index(i, k)] += dz * s.x[k - 1];
            }
        }
    }
    return g;
}

void save_params(const NetParams& p, const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    for (const double w : p.flat) out << format_shortest(w) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

NetParams load_params(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open params file: " + path.string());
    NetParams p;
    std::string line;
    std::size_t i = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        if (i >= NetParams::kWeightCount) {
            throw ValidationError(path.string() + ": more than " +
                                  std::to_string(NetParams::kWeightCount) + " weights");
        }
        p.flat[i++] = parse_double(line);
    }
    if (i != NetParams::kWeightCount) {
        throw ValidationError(path.string() + ": expected " +
                              std::to_string(NetParams::kWeightCount) + " weights, got " +
                              std::to_string(i));
    }
    return p;
}

}  // namespace signet
