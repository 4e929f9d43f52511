#include "satgame/analysis.hpp"

namespace satgame {

std::vector<int> TraceStats::shortener_prolonger_pairs() const
{
    std::vector<int> out;
    for (std::size_t j = 0; j + 1 < movers.size(); ++j)
        if (movers[j] == Player::Shortener && movers[j + 1] == Player::Prolonger)
            out.push_back(isolated_used[j] + isolated_used[j + 1]);
    return out;
}

TraceStats trace_stats(const GameRecord& rec, int k)
{
    TraceStats stats;
    const auto graphs = rec.replay();
    for (std::size_t j = 0; j < rec.actions.size(); ++j) {
        stats.movers.push_back(rec.actions[j].player);
        stats.isolated_used.push_back(popcount(graphs[j].isolated_vertices()) -
                                      popcount(graphs[j + 1].isolated_vertices()));
    }
    for (int i = 0; i < k; ++i) {
        ThresholdStats th;
        th.i = i;
        for (std::size_t t = 0; t < graphs.size(); ++t) {
            bool after_shortener = t == 0 || rec.actions[t - 1].player == Player::Shortener;
            if (!after_shortener || graphs[t].min_degree() < i)
                continue;
            const Graph& g = graphs[t];
            th.t = static_cast<int>(t);
            int lambda = 0;
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) > i) {
                    th.g += g.degree(v) - i;
                    ++lambda;
                }
            }
            th.lambda = lambda;
            break;
        }
        stats.thresholds.push_back(th);
    }
    return stats;
}

}  // namespace satgame
