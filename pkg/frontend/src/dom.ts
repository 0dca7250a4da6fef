// Minimal virtual nodes: views stay pure functions and tests can walk the
// tree without a DOM. The browser mounts via renderToString + innerHTML.

export interface VNode {
  tag: string;
  attrs: Record<string, string>;
  children: (VNode | string)[];
}

export function h(
  tag: string,
  attrs: Record<string, string> = {},
  ...children: (VNode | string | null | undefined)[]
): VNode {
  return {
    tag,
    attrs,
    children: children.filter((c): c is VNode | string => c !== null && c !== undefined),
  };
}

const VOID_TAGS = new Set(["br", "hr", "img", "input", "meta", "link"]);

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderToString(node: VNode | string): string {
  if (typeof node === "string") {
    return escapeHtml(node);
  }
  const attrs = Object.entries(node.attrs)
    .map(([k, v]) => ` ${k}="${escapeHtml(v)}"`)
    .join("");
  if (VOID_TAGS.has(node.tag)) {
    return `<${node.tag}${attrs}>`;
  }
  const inner = node.children.map(renderToString).join("");
  return `<${node.tag}${attrs}>${inner}</${node.tag}>`;
}

/** Depth-first search over a VNode tree (test and wiring helper). */
export function findAll(node: VNode, predicate: (n: VNode) => boolean): VNode[] {
  const out: VNode[] = [];
  const stack: VNode[] = [node];
  while (stack.length) {
    const current = stack.pop()!;
    if (predicate(current)) {
      out.push(current);
    }
    for (const child of current.children) {
      if (typeof child !== "string") {
        stack.push(child);
      }
    }
  }
  return out.reverse();
}

export function textContent(node: VNode | string): string {
  if (typeof node === "string") {
    return node;
  }
  return node.children.map(textContent).join("");
}
