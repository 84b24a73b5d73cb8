import init, { checkInterference, repeatStructure, iterate } from "./pkg/morphlab_web.js";

const $ = (id) => document.getElementById(id);

function el(tag, className, text) {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function showError(out, result) {
  out.replaceChildren(el("div", "error", result.error));
}

function runInterference() {
  const out = $("if-out");
  const r = JSON.parse(checkInterference($("if-morphism").value, $("if-word").value));
  if (r.error) return showError(out, r);
  const verdict = el("div", r.interference_free ? "verdict-if" : "verdict-not",
    r.interference_free ? "interference-free" : "not interference-free");
  const image = el("div", "word");
  const w = r.witness;
  if (w && w.kind === "interfered") {
    image.append(el("span", "x", w.x), el("span", "", w.y), el("span", "z", w.z));
  } else {
    image.textContent = r.image;
  }
  const parts = [verdict, el("div", "", `image under ${r.morphism}:`), image];
  if (w && w.kind === "interfered") {
    parts.push(el("div", "", `x = ${w.x || "ε"}, z = ${w.z || "ε"}`));
  } else if (w) {
    parts.push(el("div", "", `inner factor of the image of ${w.host}, starting at offset ${w.offset}`));
  }
  out.replaceChildren(...parts);
}

function runRepeats() {
  const out = $("rep-out");
  const family = $("rep-family").value;
  const source = family === "word" ? $("rep-word").value : `${family}:${$("rep-order").value}`;
  const r = JSON.parse(repeatStructure(source));
  if (r.error) return showError(out, r);
  const inMus = new Array(r.word.length).fill(false);
  for (const m of r.mus) for (let i = m.start - 1; i < m.end; i++) inMus[i] = true;
  const word = el("div", "word");
  [...r.word].forEach((c, i) => word.append(el("span", inMus[i] ? "mus" : "", c)));
  const list = (title, spans, cls) => {
    const block = el("div", "");
    block.append(el("div", "", `${title} (${spans.length}):`));
    for (const s of spans) block.append(el("div", cls, `[${s.start}, ${s.end}] ${s.content}`));
    return block;
  };
  out.replaceChildren(
    el("div", "", `|w| = ${r.word.length}`),
    word,
    list("minimal unique substrings", r.mus, "mus"),
    list("net occurrences", r.net, "net"),
  );
}

function runIteration() {
  const out = $("it-out");
  const r = JSON.parse(iterate($("it-morphism").value, $("it-word").value, Number($("it-power").value)));
  if (r.error) return showError(out, r);
  out.replaceChildren(
    el("div", "", `${r.morphism}: lengths ${r.lengths.join(", ")}`),
    el("div", "word", r.image + (r.truncated ? " …" : "")),
  );
}

$("rep-family").addEventListener("change", () => {
  const literal = $("rep-family").value === "word";
  $("rep-word").disabled = !literal;
  $("rep-order").disabled = literal;
});

await init();
$("if-run").addEventListener("click", runInterference);
$("rep-run").addEventListener("click", runRepeats);
$("it-run").addEventListener("click", runIteration);
runInterference();
runRepeats();
runIteration();
