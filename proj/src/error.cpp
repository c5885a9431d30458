#include "tfg/error.hpp"

namespace tfg {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::MissingEdge: return "missing-edge";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::EmptyEdgeSet: return "empty-edge-set";
    case ErrorKind::NotALineGraph: return "not-a-line-graph";
    case ErrorKind::NotSquare: return "not-square";
    case ErrorKind::NotSymmetric: return "not-symmetric";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::RankDeficient: return "rank-deficient";
    case ErrorKind::NotTight: return "not-tight";
    case ErrorKind::NotParseval: return "not-parseval";
    case ErrorKind::FullRankGramian: return "full-rank-gramian";
    case ErrorKind::ZeroColumn: return "zero-column";
    case ErrorKind::SurvivorsNotSpanning: return "survivors-not-spanning";
    case ErrorKind::ToleranceInconsistency: return "tolerance-inconsistency";
    case ErrorKind::BadKeepSet: return "bad-keep-set";
    case ErrorKind::DisconnectedInput: return "disconnected-input";
    case ErrorKind::TooSmall: return "too-small";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Internal: return "internal-error";
    }
    return "unknown-error";
}

}  // namespace tfg
