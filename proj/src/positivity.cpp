#include <cstdlib>
#include <deque>
#include <thread>

#include "enriques/branch.hpp"

namespace enriques {

namespace {

int thread_cap() {
    if (const char* env = std::getenv("ENRIQUES_KIT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

struct PatchSpec {
    int theta_chart, phi_chart;
    QI t, u;
};

std::array<PatchSpec, 4> initial_patches() {
    QI full(Rat(-1), Rat(1));
    QI upper(Rat(0), Rat(1));   // phi chart 0: angles [0, pi/2]
    QI lower(Rat(-1), Rat(0));  // phi chart 1: angles [pi/2, pi]
    return {PatchSpec{0, 0, full, upper}, PatchSpec{0, 1, full, lower},
            PatchSpec{1, 0, full, upper}, PatchSpec{1, 1, full, lower}};
}

struct EvalResult {
    QI enclosure;
    std::vector<TorusSample> samples;
};

EvalResult evaluate_box(const TorusForm& f, const ChartTree& tree, const CertNode& node) {
    EvalResult r;
    CirclePatch tp{tree.theta_chart, node.t};
    CirclePatch up{tree.phi_chart, node.u};
    r.enclosure = f.eval_interval(circle_enclosure(tp), circle_enclosure(up));
    Rat tm = (node.t.lo + node.t.hi) / 2;
    Rat um = (node.u.lo + node.u.hi) / 2;
    for (const Rat& tv : {node.t.lo, node.t.hi, tm})
        for (const Rat& uv : {node.u.lo, node.u.hi, um}) {
            CirclePoint a = circle_point(tree.theta_chart, tv);
            CirclePoint b = circle_point(tree.phi_chart, uv);
            r.samples.push_back(
                TorusSample{tree.theta_chart, tree.phi_chart, tv, uv, f.eval(a, b)});
        }
    return r;
}

struct QueueItem {
    int tree;
    std::size_t node;
    int depth;
};

}  // namespace

SignOutcome certify_sign(const BranchPolynomial& p, std::size_t budget) {
    TorusForm form = torus_restriction(p);
    TorusCertificate cert;
    auto patches = initial_patches();
    for (int k = 0; k < 4; ++k) {
        cert.trees[static_cast<std::size_t>(k)].theta_chart = patches[static_cast<std::size_t>(k)].theta_chart;
        cert.trees[static_cast<std::size_t>(k)].phi_chart = patches[static_cast<std::size_t>(k)].phi_chart;
        CertNode root;
        root.t = patches[static_cast<std::size_t>(k)].t;
        root.u = patches[static_cast<std::size_t>(k)].u;
        cert.trees[static_cast<std::size_t>(k)].nodes.push_back(root);
    }

    std::optional<TorusSample> pos_witness, neg_witness, zero_witness;
    bool has_positive_leaf = false, has_negative_leaf = false;
    std::deque<QueueItem> queue;
    for (int k = 0; k < 4; ++k) queue.push_back({k, 0, 0});
    std::size_t processed = 0;
    const int nthreads = thread_cap();

    auto note_sample = [&](const TorusSample& s) {
        int sg = sgn(s.value);
        if (sg == 0 && !zero_witness) zero_witness = s;
        if (sg > 0 && !pos_witness) pos_witness = s;
        if (sg < 0 && !neg_witness) neg_witness = s;
    };

    while (!queue.empty()) {
        if (zero_witness) return HasZero{zero_witness, std::nullopt};
        if (pos_witness && neg_witness)
            return HasZero{std::nullopt, std::make_pair(*pos_witness, *neg_witness)};
        std::size_t wave = std::min(queue.size(), budget - processed);
        if (wave == 0) break;
        std::vector<QueueItem> items(queue.begin(), queue.begin() + static_cast<long>(wave));
        queue.erase(queue.begin(), queue.begin() + static_cast<long>(wave));
        processed += wave;

        std::vector<EvalResult> results(items.size());
        if (items.size() >= 16 && nthreads > 1) {
            std::vector<std::thread> workers;
            std::size_t chunk = (items.size() + static_cast<std::size_t>(nthreads) - 1) /
                                static_cast<std::size_t>(nthreads);
            for (int w = 0; w < nthreads; ++w) {
                std::size_t beg = static_cast<std::size_t>(w) * chunk;
                std::size_t end = std::min(items.size(), beg + chunk);
                if (beg >= end) break;
                workers.emplace_back([&, beg, end] {
                    for (std::size_t i = beg; i < end; ++i) {
                        const auto& it = items[i];
                        const ChartTree& tree = cert.trees[static_cast<std::size_t>(it.tree)];
                        results[i] = evaluate_box(form, tree, tree.nodes[it.node]);
                    }
                });
            }
            for (auto& th : workers) th.join();
        } else {
            for (std::size_t i = 0; i < items.size(); ++i) {
                const ChartTree& tree = cert.trees[static_cast<std::size_t>(items[i].tree)];
                results[i] = evaluate_box(form, tree, tree.nodes[items[i].node]);
            }
        }

        // deterministic sequential merge
        for (std::size_t i = 0; i < items.size(); ++i) {
            const QueueItem& it = items[i];
            ChartTree& tree = cert.trees[static_cast<std::size_t>(it.tree)];
            const QI& enc = results[i].enclosure;
            cert.depth = std::max(cert.depth, it.depth);
            if (sgn(enc.lo) > 0) {
                tree.nodes[it.node].bound = enc.lo;
                has_positive_leaf = true;
                continue;
            }
            if (sgn(enc.hi) < 0) {
                tree.nodes[it.node].bound = -enc.hi;
                has_negative_leaf = true;
                continue;
            }
            for (const TorusSample& s : results[i].samples) note_sample(s);
            // split the wider side
            CertNode& n = tree.nodes[it.node];
            int dim = (n.t.width() >= n.u.width()) ? 0 : 1;
            CertNode c0, c1;
            if (dim == 0) {
                Rat mid = (n.t.lo + n.t.hi) / 2;
                c0.t = QI(n.t.lo, mid);
                c1.t = QI(mid, n.t.hi);
                c0.u = c1.u = n.u;
            } else {
                Rat mid = (n.u.lo + n.u.hi) / 2;
                c0.u = QI(n.u.lo, mid);
                c1.u = QI(mid, n.u.hi);
                c0.t = c1.t = n.t;
            }
            n.split_dim = dim;
            std::size_t id0 = tree.nodes.size();
            std::size_t id1 = id0 + 1;
            n.child0 = id0;
            n.child1 = id1;
            tree.nodes.push_back(c0);  // may reallocate; n is dead past here
            tree.nodes.push_back(c1);
            queue.push_back({it.tree, id0, it.depth + 1});
            queue.push_back({it.tree, id1, it.depth + 1});
        }
    }

    if (zero_witness) return HasZero{zero_witness, std::nullopt};
    if (pos_witness && neg_witness)
        return HasZero{std::nullopt, std::make_pair(*pos_witness, *neg_witness)};

    if (!queue.empty()) {
        // out of budget; mark survivors so the tree stays well formed
        for (const QueueItem& it : queue) {
            ChartTree& tree = cert.trees[static_cast<std::size_t>(it.tree)];
            tree.nodes[it.node].undecided = true;
        }
        return BudgetExhausted{processed};
    }

    if (has_positive_leaf && has_negative_leaf) {
        // certified boxes of both signs: exact corner evaluations witness both
        auto corner_sample = [&](int sign_wanted) -> TorusSample {
            for (const ChartTree& tree : cert.trees)
                for (const CertNode& n : tree.nodes) {
                    if (n.split_dim >= 0 || n.undecided) continue;
                    CirclePoint a = circle_point(tree.theta_chart, n.t.lo);
                    CirclePoint b = circle_point(tree.phi_chart, n.u.lo);
                    Rat v = form.eval(a, b);
                    if (sgn(v) == sign_wanted)
                        return TorusSample{tree.theta_chart, tree.phi_chart, n.t.lo, n.u.lo, v};
                }
            throw Error("Internal", "certified leaf lost its sign");
        };
        return HasZero{std::nullopt, std::make_pair(corner_sample(1), corner_sample(-1))};
    }

    cert.sign = has_positive_leaf ? 1 : -1;
    cert.boxes = processed;
    return cert;
}

void audit_certificate(const BranchPolynomial& p, const TorusCertificate& cert) {
    if (cert.sign != 1 && cert.sign != -1)
        throw Error("AuditFailed", "certificate sign must be +1 or -1");
    TorusForm form = torus_restriction(p);
    auto patches = initial_patches();
    for (int k = 0; k < 4; ++k) {
        const ChartTree& tree = cert.trees[static_cast<std::size_t>(k)];
        const PatchSpec& spec = patches[static_cast<std::size_t>(k)];
        if (tree.theta_chart != spec.theta_chart || tree.phi_chart != spec.phi_chart)
            throw Error("AuditFailed", "chart pair mismatch");
        if (tree.nodes.empty()) throw Error("AuditFailed", "empty tree");
        const CertNode& root = tree.nodes[0];
        if (root.t.lo != spec.t.lo || root.t.hi != spec.t.hi || root.u.lo != spec.u.lo ||
            root.u.hi != spec.u.hi)
            throw Error("AuditFailed", "root box does not cover the patch");
        // walk the tree: children must halve the parent; leaves must replay
        std::vector<std::size_t> stack{0};
        std::vector<bool> seen(tree.nodes.size(), false);
        while (!stack.empty()) {
            std::size_t id = stack.back();
            stack.pop_back();
            if (id >= tree.nodes.size()) throw Error("AuditFailed", "child index out of range");
            if (seen[id]) throw Error("AuditFailed", "node visited twice");
            seen[id] = true;
            const CertNode& n = tree.nodes[id];
            if (n.split_dim < 0) {
                if (n.undecided) throw Error("AuditFailed", "undecided leaf in a certificate");
                if (sgn(n.bound) <= 0) throw Error("AuditFailed", "leaf bound not positive");
                CirclePatch tp{tree.theta_chart, n.t}, up{tree.phi_chart, n.u};
                QI enc = form.eval_interval(circle_enclosure(tp), circle_enclosure(up));
                Rat replay = (cert.sign > 0) ? enc.lo : Rat(-enc.hi);
                if (replay < n.bound)
                    throw Error("AuditFailed", "replayed bound below the stored bound");
                continue;
            }
            if (n.split_dim > 1) throw Error("AuditFailed", "bad split dimension");
            const CertNode& a = tree.nodes[n.child0];
            const CertNode& b = tree.nodes[n.child1];
            if (n.split_dim == 0) {
                Rat mid = (n.t.lo + n.t.hi) / 2;
                if (a.t.lo != n.t.lo || a.t.hi != mid || b.t.lo != mid || b.t.hi != n.t.hi ||
                    a.u.lo != n.u.lo || a.u.hi != n.u.hi || b.u.lo != n.u.lo || b.u.hi != n.u.hi)
                    throw Error("AuditFailed", "children do not partition the parent");
            } else {
                Rat mid = (n.u.lo + n.u.hi) / 2;
                if (a.u.lo != n.u.lo || a.u.hi != mid || b.u.lo != mid || b.u.hi != n.u.hi ||
                    a.t.lo != n.t.lo || a.t.hi != n.t.hi || b.t.lo != n.t.lo || b.t.hi != n.t.hi)
                    throw Error("AuditFailed", "children do not partition the parent");
            }
            stack.push_back(n.child0);
            stack.push_back(n.child1);
        }
        for (std::size_t i = 0; i < tree.nodes.size(); ++i)
            if (!seen[i]) throw Error("AuditFailed", "orphan node in the tree");
    }
}

}  // namespace enriques
