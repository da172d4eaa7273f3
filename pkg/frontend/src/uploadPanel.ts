import { ApiError, type Client } from "./api.js";
import type { IngestReport } from "./types.js";

// mirror of the server default; bigger files are blocked before any POST
export const MAX_UPLOAD_BYTES = 10 * 1024 * 1024;

export function describeReport(report: IngestReport): string {
  const rejected =
    report.rejected.field_count + report.rejected.numeric + report.rejected.timestamp;
  const parts = [`${report.parsed} of ${report.total_lines} lines parsed`];
  if (rejected > 0) {
    parts.push(
      `${rejected} rejected (fields ${report.rejected.field_count}, ` +
        `numeric ${report.rejected.numeric}, time ${report.rejected.timestamp})`,
    );
  }
  return parts.join(", ");
}

export class UploadPanel {
  private input: HTMLInputElement;
  private status: HTMLElement;

  constructor(
    container: HTMLElement,
    private client: Client,
    private onUploaded: (version: number) => void,
    private toast: (message: string, kind: "ok" | "error") => void,
  ) {
    this.input = container.querySelector("input[type=file]") as HTMLInputElement;
    this.status = container.querySelector(".upload-status") as HTMLElement;
    this.input.addEventListener("change", () => void this.handleChange());
  }

  private async handleChange(): Promise<void> {
    const file = this.input.files?.[0];
    if (!file) return;
    this.input.value = "";
    if (file.size > MAX_UPLOAD_BYTES) {
      this.toast(`File is ${file.size} bytes; limit is ${MAX_UPLOAD_BYTES}. Not uploaded.`, "error");
      return;
    }
    this.status.textContent = `Uploading ${file.name}…`;
    try {
      const { data, version } = await this.client.upload(file);
      this.status.textContent = describeReport(data);
      this.toast("Upload accepted.", "ok");
      this.onUploaded(version);
    } catch (err) {
      this.status.textContent = "";
      const message = err instanceof ApiError ? err.message : "Upload failed.";
      this.toast(message, "error");
    }
  }
}
