#include "subshift/reports.hpp"

#include <cmath>
#include <sstream>

namespace subshift {

using nlohmann::json;

std::string provenance_string(const ComplexityTable& t) {
    if (t.provenance == TableProvenance::Exact) {
        return "exact(" + t.source + ")";
    }
    return "empirical(" + t.source + ")";
}

json table_json(const ComplexityTable& t) {
    json values = json::array();
    for (int n = 1; n <= t.n_max; ++n) {
        for (int k = 1; k <= t.k_max; ++k) {
            values.push_back(json{{"n", n}, {"k", k}, {"P", t.at(n, k)}});
        }
    }
    return json{{"n_max", t.n_max},
                {"k_max", t.k_max},
                {"alphabet_size", t.alphabet_size},
                {"anchors", t.anchors},
                {"provenance", provenance_string(t)},
                {"values", values}};
}

std::string table_csv(const ComplexityTable& t) {
    std::ostringstream out;
    out << "n,k,P,provenance\n";
    const std::string provenance = provenance_string(t);
    for (int n = 1; n <= t.n_max; ++n) {
        for (int k = 1; k <= t.k_max; ++k) {
            out << n << ',' << k << ',' << t.at(n, k) << ',' << provenance
                << '\n';
        }
    }
    return out.str();
}

json classification_json(const GapClassification& g) {
    json j{{"kind", to_string(g.kind)},
           {"min_square_density", g.min_square_density},
           {"plateau_steps", g.plateau_steps}};
    if (g.kind == GapClassification::Kind::BelowGap) {
        j["witness"] = json::array({g.witness_n, g.witness_k});
    }
    if (g.kind == GapClassification::Kind::Bounded) {
        j["plateau_value"] = g.plateau_value;
    }
    return j;
}

json lattice_json(const PeriodLattice& lattice) {
    json vectors = json::array();
    for (const PeriodVector& v : lattice.vectors) {
        vectors.push_back(
            json{{"dx", v.dx}, {"dy", v.dy}, {"overlap", v.overlap}});
    }
    json basis = json::array();
    for (int i = 0; i < lattice.rank; ++i) {
        basis.push_back(json::array(
            {lattice.basis.basis[static_cast<std::size_t>(i)].x,
             lattice.basis.basis[static_cast<std::size_t>(i)].y}));
    }
    return json{{"vectors", vectors},
                {"basis", basis},
                {"rank", lattice.rank},
                {"doubly_periodic", lattice.doubly_periodic},
                {"max_shift", lattice.max_shift},
                {"min_overlap", lattice.min_overlap}};
}

json entropy_json(const EntropyEstimate& e) {
    json curve = json::array();
    for (const EntropyPoint& p : e.curve) {
        curve.push_back(json{{"m", p.m},
                             {"H", p.H},
                             {"block_entropy", p.block_entropy},
                             {"slope", p.slope},
                             {"cylinders", p.cylinders},
                             {"anchors", p.anchors},
                             {"undersampled", p.undersampled}});
    }
    return json{{"direction", to_string(e.direction)},
                {"n", e.n},
                {"m_max", e.m_max},
                {"estimate", e.estimate},
                {"estimate_log2", e.estimate / std::log(2.0)},
                {"tail_H", e.tail_H},
                {"unreliable", e.unreliable},
                {"undersample_threshold", e.undersample_threshold},
                {"curve", curve}};
}

std::string entropy_csv(const EntropyEstimate& e) {
    std::ostringstream out;
    out << "m,H_m,slope,cylinders,anchors,flag\n";
    for (const EntropyPoint& p : e.curve) {
        out << p.m << ',' << p.H << ',' << p.slope << ',' << p.cylinders << ','
            << p.anchors << ',' << (p.undersampled ? 1 : 0) << '\n';
    }
    return out.str();
}

json complexity_report(const ComplexityTable& t,
                       const std::optional<MorseHedlundResult>& mh,
                       const json& config,
                       const std::vector<std::string>& warnings) {
    json report{{"command", "complexity"},
                {"config", config},
                {"table", table_json(t)},
                {"warnings", warnings}};
    if (mh) {
        report["morse_hedlund"] =
            mh->periodic_forced
                ? json{{"periodic_forced", true}, {"witness", mh->witness}}
                : json{{"periodic_forced", false}};
    } else {
        report["morse_hedlund"] = nullptr;
    }
    return report;
}

json periods_report(const Window& u, const PeriodLattice& lattice,
                    const json& config) {
    json report{{"command", "periods"},
                {"config", config},
                {"lattice", lattice_json(lattice)}};
    if (lattice.rank == 2) {
        Pattern domain = fundamental_domain(u, lattice);
        json rows = json::array();
        for (int y = domain.shape().height() - 1; y >= 0; --y) {
            std::string row;
            for (int x = 0; x < domain.shape().width(); ++x) {
                row += u.alphabet().glyph(domain.at(x, y));
            }
            rows.push_back(row);
        }
        report["fundamental_domain"] =
            json{{"width", domain.shape().width()},
                 {"height", domain.shape().height()},
                 {"cells", static_cast<std::uint64_t>(domain.shape().size())},
                 {"rows", rows}};
    } else {
        report["fundamental_domain"] = nullptr;
    }
    // Window-level periods are evidence about the configuration, not proof.
    report["note"] = "periods are window-level evidence; a finite sample "
                     "cannot certify global periodicity";
    return report;
}

json entropy_report(const EntropyEstimate& e, const json& config,
                    std::optional<int> p, std::optional<int> q,
                    const std::vector<std::string>& warnings) {
    json report{{"command", "entropy"},
                {"config", config},
                {"entropy", entropy_json(e)},
                {"warnings", warnings}};
    if (p) report["entropy"]["estimate_log_p"] = e.estimate / std::log(*p);
    if (q) report["entropy"]["estimate_log_q"] = e.estimate / std::log(*q);
    return report;
}

namespace {

std::vector<std::string> consistency_notes(const GapReportInputs& in) {
    std::vector<std::string> notes;
    const auto kind = in.classification.kind;
    const int rank = in.lattice.rank;
    if (kind == GapClassification::Kind::Bounded) {
        if (rank == 2) {
            notes.push_back("bounded complexity plateau with a rank-2 period "
                            "lattice: the sample looks like a finite orbit "
                            "coding");
            if (in.atomic_style_source) {
                notes.push_back("source is a finite rational orbit, matching "
                                "the bounded classification");
            }
        } else {
            notes.push_back("bounded plateau without a rank-2 lattice: "
                            "inconsistent; enlarge the window or max_shift");
        }
    } else if (kind == GapClassification::Kind::BelowGap) {
        notes.push_back("complexity fell below the nk/2 line: periodicity "
                        "expected under transitivity");
        if (rank == 2) {
            notes.push_back("rank-2 period lattice observed, as expected "
                            "below the gap");
        } else {
            notes.push_back("period lattice rank " + std::to_string(rank) +
                            " leaves an aperiodic direction: the sample "
                            "cannot come from a finite orbit coding");
        }
    } else {
        notes.push_back("complexity stays above the nk/2 line on this "
                        "sample: no periodicity is forced");
    }
    notes.push_back("empirical complexity is a lower bound for the source "
                    "language; above-gap refers to the sample only");
    return notes;
}

}  // namespace

json gap_report(const GapReportInputs& in, const json& config) {
    bool agreement = (in.classification.kind ==
                      GapClassification::Kind::Bounded) ==
                     (in.lattice.rank == 2);
    json consistency{{"classification", to_string(in.classification.kind)},
                     {"lattice_rank", in.lattice.rank},
                     {"bounded_iff_rank2", agreement},
                     {"atomic_style_source", in.atomic_style_source},
                     {"notes", consistency_notes(in)}};
    return json{{"command", "gap-report"},
                {"config", config},
                {"complexity",
                 {{"table", table_json(in.table)},
                  {"classification", classification_json(in.classification)}}},
                {"periodicity", lattice_json(in.lattice)},
                {"entropy",
                 {{"horizontal", entropy_json(in.horizontal)},
                  {"vertical", entropy_json(in.vertical)}}},
                {"consistency", consistency},
                {"warnings", in.warnings}};
}

std::string dump_report(const json& report) {
    return report.dump(2) + "\n";
}

}  // namespace subshift
