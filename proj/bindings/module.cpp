#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mallows/birth.hpp"
#include "mallows/distribution.hpp"
#include "mallows/experiments.hpp"
#include "mallows/hypercube.hpp"
#include "mallows/info.hpp"
#include "mallows/permutation.hpp"
#include "mallows/process.hpp"
#include "mallows/stats.hpp"
#include "mallows/uniform.hpp"

namespace py = pybind11;
using namespace mallows;

namespace {

Permutation to_perm(const std::vector<int>& one_line) {
    return Permutation::from_one_line(one_line);
}

py::int_ u128_to_py(unsigned __int128 v) {
    py::int_ high(static_cast<std::uint64_t>(v >> 64));
    py::int_ low(static_cast<std::uint64_t>(v));
    return py::int_(py::cast<py::object>(high).attr("__lshift__")(64).attr("__or__")(low));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Continuous-time Mallows process simulation core";

    // permutation arithmetic (one-line, one-based lists at the boundary)
    m.def("inv_count",
          [](const std::vector<int>& sigma) { return inv_count(to_perm(sigma)); });
    m.def("inv_vector", [](const std::vector<int>& sigma) {
        return inv_vector(to_perm(sigma)).entries();
    });
    m.def("phi", [](const std::vector<int>& inv) {
        return phi(InversionVector(inv)).to_one_line();
    });
    m.def("phi_inv", [](const std::vector<int>& sigma) {
        return phi_inv(to_perm(sigma)).entries();
    });
    m.def("compose", [](const std::vector<int>& a, const std::vector<int>& b) {
        return compose(to_perm(a), to_perm(b)).to_one_line();
    });
    m.def("transposition_of",
          [](const std::vector<int>& a,
             const std::vector<int>& b) -> std::optional<std::pair<int, int>> {
              const auto t = transposition_of(to_perm(a), to_perm(b));
              if (!t) return std::nullopt;
              return std::make_pair(t->i, t->j);
          });

    // static distribution
    m.def("normalizing_constant",
          [](int n, double q) { return normalizing_constant({n, q}); });
    m.def("log_normalizing_constant",
          [](int n, double q) { return log_normalizing_constant({n, q}); });
    m.def("pmf", [](const std::vector<int>& sigma, double q) {
        const Permutation p = to_perm(sigma);
        return pmf(p, {p.size(), q});
    });
    m.def(
        "sample",
        [](int n, double q, std::uint64_t seed, std::int64_t count) {
            std::vector<std::vector<int>> out;
            out.reserve(static_cast<std::size_t>(count));
            for (std::int64_t rep = 0; rep < count; ++rep) {
                auto stream = rng::substream(seed, static_cast<std::uint64_t>(rep));
                out.push_back(sample({n, q}, stream).to_one_line());
            }
            return out;
        },
        py::arg("n"), py::arg("q"), py::arg("seed"), py::arg("count") = 1);
    m.def("inversion_count_table", [](int n) {
        py::list out;
        for (const auto c : inversion_count_table(n).counts) out.append(u128_to_py(c));
        return out;
    });
    m.def("exact_jump_time_sf", &exact_jump_time_sf);
    m.def("enumerate_oracle", [](int n, double q) {
        py::dict out;
        for (const auto& [sigma, p] : enumerate_oracle(n, q)) {
            std::string key;
            for (int v : sigma.to_one_line()) {
                if (!key.empty()) key += ',';
                key += std::to_string(v);
            }
            out[py::str(key)] = p;
        }
        return out;
    });

    // birth coordinates
    m.def("birth_rate", &birth_rate);
    m.def("birth_marginal_pmf", &birth_marginal_pmf);
    m.def("integrated_hazard", &integrated_hazard, py::arg("j"), py::arg("k"),
          py::arg("s"), py::arg("t"), py::arg("abs_tol") = 1e-10);
    m.def("simulate_birth_coordinate", [](int j, double horizon, std::uint64_t seed) {
        auto stream = rng::substream(seed, 0, static_cast<std::uint64_t>(j));
        return simulate_birth_coordinate(j, horizon, stream).jump_times;
    });

    // uniform coordinates
    m.def("level_function", &level_function);
    m.def("coordinate_jump_time", &coordinate_jump_time);
    m.def("simulate_uniform_coordinate", [](int j, double horizon, double u) {
        return simulate_uniform_coordinate(j, horizon, u).jump_times;
    });

    // full process
    py::class_<ProcessTrajectory>(m, "Trajectory")
        .def_readonly("n", &ProcessTrajectory::n)
        .def_readonly("horizon", &ProcessTrajectory::horizon)
        .def_property_readonly("construction",
                               [](const ProcessTrajectory& t) {
                                   return construction_name(t.construction);
                               })
        .def_property_readonly("events",
                               [](const ProcessTrajectory& t) {
                                   std::vector<std::tuple<double, int, int>> out;
                                   out.reserve(t.events.size());
                                   for (const auto& e : t.events)
                                       out.emplace_back(e.t, e.j, e.k);
                                   return out;
                               })
        .def("state_at",
             [](const ProcessTrajectory& t, double at) {
                 return state_at(t, at).to_one_line();
             })
        .def("inversions_at",
             [](const ProcessTrajectory& t, double at) {
                 return inversions_at(t, at).entries();
             })
        .def("jumping_times", [](const ProcessTrajectory& t) { return jumping_times(t); })
        .def("jump_count_at",
             [](const ProcessTrajectory& t, double at) { return jump_count_at(t, at); });

    m.def(
        "simulate_process",
        [](int n, double horizon, const std::string& construction, std::uint64_t seed,
           std::uint64_t replication) {
            const rng::StreamFamily family{seed, replication};
            return simulate_process_rejecting(n, horizon,
                                              construction_from_name(construction), family);
        },
        py::arg("n"), py::arg("horizon"), py::arg("construction"), py::arg("seed"),
        py::arg("replication") = 0);
    m.def("simulate_uniform_process",
          [](double horizon, const std::vector<double>& driver) {
              const UniformDriver d(driver);
              return simulate_uniform_process(d.size(), horizon, d);
          });

    // transition graph
    m.def("hypercube_counts", [](int n) {
        const auto g = build_hypercube(n);
        return std::make_pair(g.vertex_count, g.edges.size());
    });
    m.def("hypercube_edges", [](int n) { return build_hypercube(n).edges; });
    m.def("is_hypercube_edge", [](const std::vector<int>& a, const std::vector<int>& b) {
        return is_hypercube_edge(to_perm(a), to_perm(b));
    });
    m.def("generator_set", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& g : generator_set(build_hypercube(n)))
            out.push_back(g.to_one_line());
        return out;
    });

    // information content of the uniform construction
    m.def("expected_info", &expected_info);
    m.def("var_info_at_1", &var_info_at_1);
    m.def("full_retrieval_cdf", &full_retrieval_cdf);
    m.def("full_retrieval_time", [](const std::vector<double>& driver) {
        return full_retrieval_time(InfoPath(UniformDriver(driver)));
    });
    m.def("info_fraction", [](const std::vector<double>& driver, double t) {
        return info_fraction(InfoPath(UniformDriver(driver)), t);
    });
    m.def(
        "limit_mgf_nonretrieved",
        [](double t, double u, int truncation) {
            const auto r = limit_mgf_nonretrieved(t, u, truncation);
            return std::make_pair(r.value, r.remainder_bound);
        },
        py::arg("t"), py::arg("u"), py::arg("truncation") = 200);

    // statistics
    py::class_<stats::GofReport>(m, "GofReport")
        .def_readonly("name", &stats::GofReport::name)
        .def_readonly("test", &stats::GofReport::test)
        .def_readonly("statistic", &stats::GofReport::statistic)
        .def_readonly("threshold", &stats::GofReport::threshold)
        .def_readonly("pass_", &stats::GofReport::pass)
        .def_readonly("sample_size", &stats::GofReport::sample_size)
        .def_readonly("dof", &stats::GofReport::dof);

    m.def("ks_statistic",
          [](std::vector<double> sample, const std::function<double(double)>& cdf) {
              return stats::ks_statistic(stats::EmpiricalSample(std::move(sample)), cdf);
          });
    m.def("kolmogorov_quantile", &stats::kolmogorov_quantile);
    m.def("chi_square", &stats::chi_square, py::arg("name"), py::arg("observed"),
          py::arg("expected_probs"), py::arg("total"), py::arg("alpha"));
    m.def("erlang_cdf", &stats::erlang_cdf);
}
