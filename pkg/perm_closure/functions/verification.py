# -*- coding: utf-8 -*-
"""Module perm_closure.functions.verification.py

Functions run by the verification graph. Each takes the Node and the Runner
and returns a CheckReport.
"""

from perm_closure.automata.constructions import equivalent
from perm_closure.automata.constructions import is_commutative
from perm_closure.automata.constructions import minimize
from perm_closure.expressions.compiler import PATH_FALLBACK
from perm_closure.expressions.compiler import compile_expression
from perm_closure.oracle.check_report import CheckReport
from perm_closure.oracle.check_report import cross_check

def compile_options(runner):
    settings = runner.settings
    return {
        "minimize": settings["minimize"],
        "shrink_rays": settings["grid"]["shrink_rays"],
        "grid_cap": settings["grid"]["cap"],
        "rewrite_budget": settings["rewrite"]["step_budget"]
    }

def check_compile(node, runner):
    """compile the runner's expression and keep the result on the runner"""

    report = CheckReport(str(node))
    runner.result = compile_expression(runner.expression,
                                       **compile_options(runner))
    report.append_audit("path: " + runner.result.path)
    if runner.result.residual is not None:
        report.append_audit("residual: " + str(runner.result.residual))
    report.set_status(1, str(runner.result.dfa.state_count)
                      + " states via the " + runner.result.path + " path")
    return report

def check_cross(node, runner):
    oracle = runner.settings["oracle"]
    report = cross_check(runner.expression, runner.result.dfa, runner.max_len,
                         oracle["candidate_cap"], oracle["set_cap"])
    report.name = str(node)
    return report

def check_commutativity(node, runner):
    report = CheckReport(str(node))
    if is_commutative(minimize(runner.result.dfa)):
        report.set_status(1, "delta(q, ab) = delta(q, ba) everywhere")
    else:
        report.set_status(-1, "some state distinguishes two letter orders")
    return report

def check_size_bound(node, runner):
    report = CheckReport(str(node))
    status = 1
    for c in runner.result.constructions:
        report.append_audit("%s: %d states, bound %d"
                            % (c.kind, c.unminimized_size, c.state_bound))
        if c.unminimized_size > c.state_bound:
            status = -1
    report.set_status(status, str(len(runner.result.constructions))
                      + " grid automata checked")
    return report

def check_pipeline_agreement(node, runner):
    """the normal-form result must equal the forced-fallback result"""

    report = CheckReport(str(node))
    if runner.result.path == PATH_FALLBACK:
        report.set_status(0, "expression has no normal form, only the "
                          + "fallback pipeline applies")
        return report
    fallback = compile_expression(runner.expression, force_fallback=True,
                                  **compile_options(runner))
    if equivalent(runner.result.dfa, fallback.dfa):
        report.set_status(1, "both pipelines give the same language")
    else:
        report.set_status(-1, "pipelines give different languages")
    return report
