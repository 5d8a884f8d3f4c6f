"""
Main Blueprint for workbench routes
"""

import time

from flask import Blueprint, jsonify, request

from valuta.errors import ParseError, ValutaError
from valuta.models.descriptor import parse_descriptor
from valuta.models.matroid import Matroid, parse_mtx
from valuta.services import decomposition_service, family_service, invariant_service
from valuta.services.decomposition import RANK_FAMILIES

bp = Blueprint('main', __name__)

BASES = {"cuspidal": "cuspidal", "class-u": "class_U", "class-t": "class_T"}


def matroid_from_request() -> Matroid:
    """Body carries either `mtx` text or a `descriptor` string"""
    payload = request.get_json(silent=True) or {}
    if payload.get("mtx"):
        return parse_mtx(payload["mtx"])
    if payload.get("descriptor"):
        return family_service.realize(parse_descriptor(payload["descriptor"]))
    raise ParseError("request needs an `mtx` or `descriptor` field", module="cli")


def error_response(e: ValutaError):
    return jsonify({"error": e.message, "module": e.module}), 400


@bp.route("/tutte", methods=["POST"])
def tutte():
    """Tutte polynomial of the posted matroid"""
    try:
        M = matroid_from_request()
        T = invariant_service.tutte(M)
        return jsonify({"n": M.n, "k": M.k, "tutte": T.to_json(), "text": str(T)})
    except ValutaError as e:
        return error_response(e)
    except Exception as e:
        return jsonify({"error": str(e)}), 500


@bp.route("/ginv", methods=["POST"])
def ginv():
    try:
        M = matroid_from_request()
        G = invariant_service.g_invariant(M)
        return jsonify({"n": M.n, "k": M.k, "ginv": G.to_json()})
    except ValutaError as e:
        return error_response(e)
    except Exception as e:
        return jsonify({"error": str(e)}), 500


@bp.route("/classify", methods=["POST"])
def classify():
    try:
        M = matroid_from_request()
        return jsonify(family_service.classify(M).to_json())
    except ValutaError as e:
        return error_response(e)
    except Exception as e:
        return jsonify({"error": str(e)}), 500


@bp.route("/decompose", methods=["POST"])
def decompose():
    """Integer decomposition over `basis` (cuspidal, class-u or class-t)"""
    try:
        basis = (request.get_json(silent=True) or {}).get("basis", "cuspidal")
        if basis not in BASES:
            return jsonify({"error": f"unknown basis {basis!r}", "module": "decomposition"}), 400
        M = matroid_from_request()
        return jsonify(decomposition_service.decompose(M, BASES[basis]).to_json())
    except ValutaError as e:
        return error_response(e)
    except Exception as e:
        return jsonify({"error": str(e)}), 500


@bp.route("/rank-table", methods=["GET"])
def rank_table():
    """Query: family, n (repeatable), k (repeatable, optional), invariant (repeatable, optional)"""
    try:
        family = request.args.get("family", "all")
        if family not in RANK_FAMILIES:
            return jsonify({"error": f"unknown family {family!r}", "module": "decomposition"}), 400
        ns = request.args.getlist("n", type=int)
        if not ns:
            return jsonify({"error": "n is required", "module": "decomposition"}), 400
        ks = request.args.getlist("k", type=int) or None
        invariants = request.args.getlist("invariant") or ["tutte", "ginv"]
        table = decomposition_service.rank_table(family, ns, ks, invariants)
        return jsonify(table.to_json())
    except ValutaError as e:
        return error_response(e)
    except Exception as e:
        return jsonify({"error": str(e)}), 500


@bp.route("/health", methods=["GET"])
@bp.route("/ping", methods=["GET"])
def health_check():
    """Simple health check for deployment platforms"""
    return jsonify({
        "status": "healthy",
        "service": "valuta",
        "timestamp": time.time()
    })
