"""
    graphconj.dsl_eval
    ~~~~~~~~~~~~~~~~~~

    Turns the token stream of a conjecture expression into an evaluation
    tree that respects operator priority, and folds that tree with caller
    supplied operators (building an AST, or computing a value).

    :copyright: 2025 by GraphConj Authors, see AUTHORS for more details.
    :license: BSD, see LICENSE for more details.
"""

import token as tokenlib
from tokenize import TokenInfo

from .errors import ConjectureSyntaxError

# For controlling order of operations
_OP_PRIORITY = {
    "unary": 2,
    "*": 1,
    "/": 1,
    "+": 0,
    "-": 0,
}


def _error(msg, tok=None):
    col = tok.start[1] + 1 if tok is not None else None
    return ConjectureSyntaxError(msg, col=col)


def merge_rational_literals(tokens):
    """Fuse ``NUMBER / NUMBER`` written without spaces into one ``p/q`` token.

    ``1/2`` is a literal while ``1 / 2`` is a division.
    """
    tokens = list(tokens)
    out = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if (
            i + 2 < len(tokens)
            and tok.type == tokenlib.NUMBER
            and tokens[i + 1].string == "/"
            and tokens[i + 2].type == tokenlib.NUMBER
            and tok.end == tokens[i + 1].start
            and tokens[i + 1].end == tokens[i + 2].start
        ):
            den = tokens[i + 2]
            out.append(
                TokenInfo(
                    tokenlib.NUMBER,
                    f"{tok.string}/{den.string}",
                    tok.start,
                    den.end,
                    tok.line,
                )
            )
            i += 3
        else:
            out.append(tok)
            i += 1
    return out


class EvalTreeNode:
    """Single node within an evaluation tree

    left + operator + right --> binary op
    left + operator --> unary op
    left + right --> implicit op (always an error in conjectures)
    left --> single value
    """

    def __init__(self, left, operator=None, right=None):
        self.left = left
        self.operator = operator
        self.right = right

    def to_string(self):
        # For debugging purposes
        if self.right:
            comps = [self.left.to_string()]
            if self.operator:
                comps.append(self.operator[1])
            comps.append(self.right.to_string())
        elif self.operator:
            comps = [self.operator[1], self.left.to_string()]
        else:
            return self.left[1]
        return "(%s)" % " ".join(comps)

    def first_token(self):
        if self.right or not self.operator:
            node = self.left
            return node if isinstance(node, TokenInfo) else node.first_token()
        return self.operator

    def evaluate(self, define_op, bin_op, un_op):
        """Fold the tree.

        Parameters
        ----------
        define_op : callable
            Translates a NAME or NUMBER token into a value.
        bin_op : dict
            Maps ``+ - * /`` to two-argument callables.
        un_op : dict
            Maps ``+ -`` to one-argument callables.
        """
        if self.right:
            if not self.operator:
                raise _error(
                    "missing operator between operands", self.right.first_token()
                )
            op_text = self.operator[1]
            if op_text not in bin_op:
                raise _error(f'unsupported binary operator "{op_text}"', self.operator)
            left = self.left.evaluate(define_op, bin_op, un_op)
            return bin_op[op_text](left, self.right.evaluate(define_op, bin_op, un_op))
        elif self.operator:
            op_text = self.operator[1]
            if op_text not in un_op:
                raise _error(f'unsupported unary operator "{op_text}"', self.operator)
            return un_op[op_text](self.left.evaluate(define_op, bin_op, un_op))
        else:
            return define_op(self.left)


def build_eval_tree(tokens, op_priority=_OP_PRIORITY, index=0, depth=0, prev_op=None):
    """Build an evaluation tree from a set of tokens.

    Params:
    Index, depth, and prev_op used recursively, so don't touch.
    Tokens is an iterable of tokens ending with ENDMARKER.

    General Strategy:
    1) Get left side of operator
    2) If no tokens left, return final result
    3) Get operator
    4) Use recursion to create tree starting at token on right side of operator (start at step #1)
    4.1) If recursive call encounters an operator with lower or equal priority to step #2, exit recursion
    5) Combine left side, operator, and right side into a new left side
    6) Go back to step #2

    """

    if depth == 0 and prev_op is None:
        # ensure tokens is list so we can access by index
        tokens = list(tokens)

    result = None

    while True:
        current_token = tokens[index]
        token_type = current_token[0]
        token_text = current_token[1]

        if token_type == tokenlib.OP:
            if token_text == ")":
                if prev_op is None:
                    raise _error("unopened parenthesis", current_token)
                elif prev_op == "(":
                    # close parenthetical group
                    if result is None:
                        raise _error("empty parentheses", current_token)
                    return result, index
                else:
                    # parenthetical group ending, but we need to close sub-operations within group
                    return result, index - 1
            elif token_text == "(":
                # gather parenthetical group
                right, index = build_eval_tree(
                    tokens, op_priority, index + 1, 0, token_text
                )
                if not tokens[index][1] == ")":
                    raise _error("unclosed parenthesis", current_token)
                if result:
                    # implicit op with a parenthetical group, i.e. "3 (x + 1)"
                    result = EvalTreeNode(left=result, right=right)
                else:
                    # get first token
                    result = right
            elif token_text in op_priority:
                if result:
                    # equal-priority operators are grouped in a left-to-right order
                    #     (2 * 3 / 4) --> ((2 * 3) / 4)
                    if op_priority[token_text] <= op_priority.get(prev_op, -1):
                        # previous operator is higher priority, so end previous binary op
                        return result, index - 1
                    # get right side of binary op
                    right, index = build_eval_tree(
                        tokens, op_priority, index + 1, depth + 1, token_text
                    )
                    if right is None:
                        raise _error(f'"{token_text}" needs a right operand', current_token)
                    result = EvalTreeNode(
                        left=result, operator=current_token, right=right
                    )
                elif token_text in ("+", "-"):
                    # unary operator
                    right, index = build_eval_tree(
                        tokens, op_priority, index + 1, depth + 1, "unary"
                    )
                    if right is None:
                        raise _error(f'"{token_text}" needs an operand', current_token)
                    result = EvalTreeNode(left=right, operator=current_token)
                else:
                    raise _error(f'"{token_text}" needs a left operand', current_token)
            else:
                raise _error(f'unexpected "{token_text}"', current_token)
        elif token_type == tokenlib.NUMBER or token_type == tokenlib.NAME:
            if result:
                # two operands in a row, reported when the tree is folded
                if 1 <= op_priority.get(prev_op, -1):
                    return result, index - 1
                right, index = build_eval_tree(tokens, op_priority, index, depth + 1, "")
                result = EvalTreeNode(left=result, right=right)
            else:
                # get first token
                result = EvalTreeNode(left=current_token)
        elif token_type != tokenlib.ENDMARKER:
            raise _error(f'unexpected "{token_text}"', current_token)

        if tokens[index][0] == tokenlib.ENDMARKER:
            if prev_op == "(":
                raise _error("unclosed parenthesis", tokens[index])
            if depth > 0 or prev_op:
                # have to close recursion
                return result, index
            else:
                # recursion all closed, so just return the final result
                return result

        if index + 1 >= len(tokens):
            # should hit ENDMARKER before this ever happens
            raise _error("unexpected end of expression")

        index += 1
