# -*- coding: utf-8 -*-
"""Module perm_closure.cli.py

This module contains the command line entry point. Every subcommand loads its
inputs, runs one construction or check and writes the result to standard
output or to the file given with -o. Errors are reported on standard error
and mapped to exit codes: 2 for usage, parse, settings and expression errors,
3 for construction errors.
"""

import functools
import json
import logging
import sys

import click

from perm_closure.automata.constructions import enumerate_words
from perm_closure.automata.constructions import member as dfa_member
from perm_closure.automata.dot import to_dot
from perm_closure.automata.permutation import validate_permutation
from perm_closure.automaton_parser import load_automaton
from perm_closure.automaton_parser import serialize_automaton
from perm_closure.automaton_parser import write_automaton
from perm_closure.config.constants import EMPTY_WORD_DISPLAY
from perm_closure.config.constants import EXIT_CONSTRUCTION
from perm_closure.config.constants import EXIT_NEGATIVE
from perm_closure.config.constants import EXIT_OK
from perm_closure.config.constants import EXIT_USAGE
from perm_closure.engine.builders import build_iterstar_dfa
from perm_closure.engine.builders import build_perm_dfa
from perm_closure.engine.builders import build_shuffle_dfa
from perm_closure.exceptions.argument_exception import ArgumentException
from perm_closure.exceptions.automaton_exception import AutomatonException
from perm_closure.exceptions.automaton_exception import \
    NotPermutationException
from perm_closure.exceptions.construction_exception import \
    ConstructionException
from perm_closure.exceptions.expression_exception import ExpressionException
from perm_closure.exceptions.oracle_exception import OracleCapException
from perm_closure.exceptions.settings_exception import SettingsException
from perm_closure.expression_file_parser import load_expression
from perm_closure.expression_file_parser import parse_atom_options
from perm_closure.expressions.compiler import compile_expression
from perm_closure.settings_parser import load_settings
from perm_closure.verification.runner import Runner

CONSTRUCTION_ERRORS = (NotPermutationException, ConstructionException,
                       OracleCapException)
USAGE_ERRORS = (ArgumentException, SettingsException, AutomatonException,
                ExpressionException, FileNotFoundError)

def exit_codes(command):
    """run a subcommand, reporting library errors on stderr with exit codes"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except CONSTRUCTION_ERRORS as e:
            click.echo("error: " + str(e), err=True)
            sys.exit(EXIT_CONSTRUCTION)
        except USAGE_ERRORS as e:
            click.echo("error: " + str(e), err=True)
            sys.exit(EXIT_USAGE)
    return wrapper

def build_options(ctx, no_minimize=False, shrink_rays=False, grid_cap=None):
    """builder keyword arguments, command line flags over settings"""

    settings = ctx.obj["settings"]()
    return {
        "minimize": settings["minimize"] and not no_minimize,
        "shrink_rays": settings["grid"]["shrink_rays"] or shrink_rays,
        "grid_cap": grid_cap if grid_cap is not None
            else settings["grid"]["cap"]
    }

def emit_automaton(d, output):
    if output:
        write_automaton(d, output)
        logging.info("automaton written to " + output)
    else:
        click.echo(serialize_automaton(d), nl=False)

def build_flags(command):
    """flags shared by every grid construction"""

    command = click.option("--grid-cap", type=int, default=None,
                           help="maximum number of grid points")(command)
    command = click.option("--shrink-rays", is_flag=True,
                           help="shrink the grid box by exact ray "
                           + "profiles")(command)
    command = click.option("--no-minimize", is_flag=True,
                           help="keep the unminimized grid automaton")(command)
    command = click.option("--output", "-o", default=None,
                           help="automaton output file, default stdout")(
                               command)
    return command

@click.group()
@click.option("--verbose", "-v", is_flag=True, help="debug logging")
@click.option("--config", "-c", default=None,
              help="path to YAML settings file")
@click.pass_context
def main(ctx, verbose, config):
    """Commutative closure automata for shuffle expressions over group
    languages"""

    logging.basicConfig(format="%(message)s",
                        level=logging.DEBUG if verbose else logging.INFO)

    # settings are loaded by the subcommand so errors get its exit code
    @functools.lru_cache(maxsize=None)
    def settings():
        return load_settings(config)

    ctx.obj = {"settings": settings}

@main.command(help="check that an automaton is a permutation automaton")
@click.argument("automaton")
@exit_codes
def validate(automaton):
    d = load_automaton(automaton)
    report = validate_permutation(d)
    click.echo(report.describe())
    if not report.is_permutation:
        sys.exit(EXIT_NEGATIVE)
    click.echo("order " + " ".join(letter + "=" + str(report.orders[letter])
                                   for letter in d.alphabet))

@main.command(help="automaton for the commutative closure of a group "
              + "language")
@click.argument("automaton")
@build_flags
@click.pass_context
@exit_codes
def perm(ctx, automaton, output, no_minimize, shrink_rays, grid_cap):
    construction = build_perm_dfa(
        load_automaton(automaton),
        **build_options(ctx, no_minimize, shrink_rays, grid_cap))
    emit_automaton(construction.dfa, output)

@main.command(help="automaton for the commutative closure of the iterated "
              + "shuffle of a group language")
@click.argument("automaton")
@build_flags
@click.pass_context
@exit_codes
def iterstar(ctx, automaton, output, no_minimize, shrink_rays, grid_cap):
    construction = build_iterstar_dfa(
        load_automaton(automaton),
        **build_options(ctx, no_minimize, shrink_rays, grid_cap))
    emit_automaton(construction.dfa, output)

@main.command(help="automaton for the commutative closure of the shuffle of "
              + "several group languages")
@click.argument("automata", nargs=-1, required=True)
@build_flags
@click.pass_context
@exit_codes
def shuffleperm(ctx, automata, output, no_minimize, shrink_rays, grid_cap):
    construction = build_shuffle_dfa(
        [load_automaton(a) for a in automata],
        **build_options(ctx, no_minimize, shrink_rays, grid_cap))
    emit_automaton(construction.dfa, output)

def compile_file(ctx, exprfile, atom, fallback=False, no_minimize=False,
                 shrink_rays=False, grid_cap=None):
    expression = load_expression(exprfile, parse_atom_options(atom))
    settings = ctx.obj["settings"]()
    result = compile_expression(
        expression, force_fallback=fallback,
        rewrite_budget=settings["rewrite"]["step_budget"],
        **build_options(ctx, no_minimize, shrink_rays, grid_cap))
    logging.info("compiled " + str(expression) + " via the " + result.path
                 + " path")
    return result

@main.command(name="compile",
              help="automaton for the commutative closure of an expression")
@click.argument("exprfile")
@click.option("--atom", multiple=True, help="override an atom, NAME=path")
@click.option("--fallback", is_flag=True,
              help="skip the normal form, use the expression NFA engine")
@build_flags
@click.pass_context
@exit_codes
def compile_command(ctx, exprfile, atom, fallback, output, no_minimize,
                    shrink_rays, grid_cap):
    result = compile_file(ctx, exprfile, atom, fallback, no_minimize,
                          shrink_rays, grid_cap)
    emit_automaton(result.dfa, output)

@main.command(help="exit 0 if the automaton accepts the word, 1 otherwise")
@click.argument("automaton")
@click.argument("word")
@exit_codes
def member(automaton, word):
    if word == EMPTY_WORD_DISPLAY:
        word = ""
    if dfa_member(load_automaton(automaton), word):
        click.echo("accepted")
    else:
        click.echo("rejected")
        sys.exit(EXIT_NEGATIVE)

@main.command(name="enumerate",
              help="list accepted words in length-then-lex order")
@click.argument("automaton")
@click.option("--max-len", type=int, default=5, show_default=True,
              help="maximum word length")
@exit_codes
def enumerate_command(automaton, max_len):
    if max_len < 0:
        raise ArgumentException("--max-len must not be negative")
    for w in enumerate_words(load_automaton(automaton), max_len):
        click.echo(w if w else EMPTY_WORD_DISPLAY)

@main.command(help="write the automaton in Graphviz DOT format")
@click.argument("automaton")
@exit_codes
def dot(automaton):
    click.echo(to_dot(load_automaton(automaton)))

@main.command(help="compile an expression and check the result against the "
              + "bounded oracle")
@click.argument("exprfile")
@click.option("--atom", multiple=True, help="override an atom, NAME=path")
@click.option("--max-len", type=int, default=None,
              help="oracle word length cap")
@click.option("--report", default=None, help="JSON report output file")
@click.pass_context
@exit_codes
def verify(ctx, exprfile, atom, max_len, report):
    expression = load_expression(exprfile, parse_atom_options(atom))
    settings = ctx.obj["settings"]()
    if max_len is None:
        max_len = settings["oracle"]["max_len"]
    runner = Runner(expression, settings, max_len)
    runner.run_checks()

    click.echo(runner.nodes["cross_check"].report.render())
    for name, node in runner.nodes.items():
        if name not in ("base", "cross_check") and node.result == -1:
            click.echo(name + ": " + node.report.render())

    if report:
        with open(report, "w") as outfile:
            json.dump(runner.generate_final_json(), outfile, indent=4)
        logging.info("report written to " + report)
    sys.exit(EXIT_OK if runner.passed else EXIT_NEGATIVE)

@main.command(help="grid sizes and bounds of every construction of an "
              + "expression")
@click.argument("exprfile")
@click.option("--atom", multiple=True, help="override an atom, NAME=path")
@click.option("--format", "output_format", type=click.Choice(["text", "tsv"]),
              default="text", show_default=True)
@click.option("--shrink-rays", is_flag=True,
              help="shrink the grid box by exact ray profiles")
@click.option("--grid-cap", type=int, default=None,
              help="maximum number of grid points")
@click.pass_context
@exit_codes
def stats(ctx, exprfile, atom, output_format, shrink_rays, grid_cap):
    result = compile_file(ctx, exprfile, atom, shrink_rays=shrink_rays,
                          grid_cap=grid_cap)
    if output_format == "tsv":
        click.echo("kind\tunminimized\tbound\tminimized")
        for c in result.constructions:
            click.echo("%s\t%d\t%d\t%d" % (c.kind, c.unminimized_size,
                                           c.state_bound, c.dfa.state_count))
        return
    for c in result.constructions:
        click.echo("%s: %d grid states, bound %d, %d minimized"
                   % (c.kind, c.unminimized_size, c.state_bound,
                      c.dfa.state_count))
    click.echo("result: %d states via the %s path"
               % (result.dfa.state_count, result.path))
