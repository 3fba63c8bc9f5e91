/** Single-page practice flow: pick a question, answer, submit, revise.
 *
 * Mistake messages render exactly as the service sends them; the only
 * client-side processing is converting byte spans to character spans for the
 * in-text highlights.
 */

import { fetchQuestions, submitAttempt, LexErrorResponse } from "./api.js";
import { byteToCharIndex } from "./offsets.js";
import { caretLines, segmentResponse } from "./highlight.js";
import type { AttemptView, QuestionSummary } from "./types.js";

function el<T extends HTMLElement>(doc: Document, id: string): T {
  const found = doc.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

export function initApp(doc: Document): void {
  const select = el<HTMLSelectElement>(doc, "question-select");
  const prompt = el<HTMLParagraphElement>(doc, "prompt");
  const input = el<HTMLTextAreaElement>(doc, "response-input");
  const submit = el<HTMLButtonElement>(doc, "submit-btn");
  const banner = el<HTMLDivElement>(doc, "error-banner");
  const result = el<HTMLElement>(doc, "result");
  const gradeBox = el<HTMLDivElement>(doc, "grade");
  const highlighted = el<HTMLPreElement>(doc, "highlighted");
  const messages = el<HTMLOListElement>(doc, "messages");
  const historyList = el<HTMLOListElement>(doc, "history-list");

  let questions: QuestionSummary[] = [];
  const history: AttemptView[] = [];
  let pending = false;

  function showBanner(text: string): void {
    banner.textContent = text;
    banner.classList.remove("hidden");
  }

  function clearBanner(): void {
    banner.textContent = "";
    banner.classList.add("hidden");
  }

  function currentQuestion(): QuestionSummary | undefined {
    return questions.find((q) => q.id === select.value);
  }

  function onQuestionChange(): void {
    const question = currentQuestion();
    prompt.textContent = question ? question.prompt : "";
    submit.disabled = !question || pending;
    result.classList.add("hidden");
    clearBanner();
  }

  function renderHighlights(response: string, view: AttemptView): void {
    highlighted.textContent = "";
    for (const segment of segmentResponse(response, view.result.mistakes)) {
      if (segment.kind === "plain") {
        highlighted.appendChild(doc.createTextNode(segment.text));
      } else {
        const span = doc.createElement("span");
        span.className = `hl-${segment.kind}`;
        span.title = segment.kind;
        span.textContent = segment.text;
        highlighted.appendChild(span);
      }
    }
  }

  function renderAttempt(view: AttemptView): void {
    const percent = (view.result.grade * 100).toFixed(2);
    gradeBox.textContent = `Grade: ${percent}%`;
    gradeBox.className = view.result.grade === 1 ? "grade perfect" : "grade";
    renderHighlights(view.response, view);
    messages.textContent = "";
    for (const message of view.result.messages) {
      const item = doc.createElement("li");
      item.textContent = message;
      messages.appendChild(item);
    }
    result.classList.remove("hidden");

    const row = doc.createElement("li");
    row.textContent = `#${view.attemptNumber} — ${percent}% — ${view.questionId}`;
    historyList.appendChild(row);
  }

  async function onSubmit(): Promise<void> {
    const question = currentQuestion();
    if (!question || pending) return;
    pending = true;
    submit.disabled = true;
    clearBanner();
    const response = input.value;
    try {
      const attempt = await submitAttempt(question.id, response);
      const view: AttemptView = {
        attemptNumber: history.length + 1,
        questionId: question.id,
        response,
        result: attempt,
      };
      history.push(view);
      renderAttempt(view);
    } catch (err) {
      if (err instanceof LexErrorResponse) {
        const at = byteToCharIndex(response, err.position);
        const { line, caret } = caretLines(response, at);
        showBanner(`Your text could not be read: ${err.message}\n${line}\n${caret}`);
      } else {
        showBanner("Could not reach the grading service; your text is kept — try again.");
      }
    } finally {
      pending = false;
      submit.disabled = !currentQuestion();
    }
  }

  select.addEventListener("change", onQuestionChange);
  submit.addEventListener("click", () => void onSubmit());

  void fetchQuestions()
    .then((list) => {
      questions = list;
      select.textContent = "";
      for (const question of list) {
        const option = doc.createElement("option");
        option.value = question.id;
        option.textContent = question.id;
        select.appendChild(option);
      }
      onQuestionChange();
    })
    .catch(() => showBanner("Could not load the question list."));
}
